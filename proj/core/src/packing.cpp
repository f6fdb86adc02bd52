#include "graphpack/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphpack {

Labelling Labelling::identity(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  return Labelling(std::move(perm));
}

Labelling::Labelling(std::vector<int> perm) : perm_(std::move(perm)) {
  const int n = static_cast<int>(perm_.size());
  inv_.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int label = perm_[v];
    if (label < 0 || label >= n || inv_[label] != -1)
      throw std::invalid_argument("Labelling: perm is not a bijection on {0..n-1}");
    inv_[label] = v;
  }
}

PackingInstance::PackingInstance(Graph blue, Graph red) {
  if (blue.vertex_count() != red.vertex_count())
    throw std::invalid_argument("PackingInstance: vertex count mismatch");
  // Normalize so delta1 >= delta2; ties keep input order.
  if (blue.max_degree() < red.max_degree()) {
    blue_ = std::move(red);
    red_ = std::move(blue);
    roles_swapped_ = true;
  } else {
    blue_ = std::move(blue);
    red_ = std::move(red);
  }
}

std::vector<int> PackingInstance::red_label_neighbors(const Labelling& lab,
                                                      int label) const {
  std::vector<int> out;
  const auto nbrs = red_.adj(lab.vertex_of(label));
  out.reserve(nbrs.size());
  for (int x : nbrs) out.push_back(lab.label_of(x));
  return out;
}

PurpleReport purple_report(const PackingInstance& inst, const Labelling& lab) {
  if (lab.size() != inst.n())
    throw std::invalid_argument("purple_report: labelling size mismatch");
  PurpleReport report;
  std::vector<int> degree(static_cast<std::size_t>(inst.n()), 0);
  for (const auto& [u, v] : inst.blue().edges()) {
    if (inst.red_label_edge(lab, u, v)) {
      report.purple_edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  }
  report.count = static_cast<int>(report.purple_edges.size());
  report.max_purple_degree = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
  return report;
}

bool is_packing(const PackingInstance& inst, const Labelling& lab) {
  for (const auto& [u, v] : inst.blue().edges())
    if (inst.red_label_edge(lab, u, v)) return false;
  return true;
}

ConditionProfile condition_profile(const PackingInstance& inst) {
  ConditionProfile profile;
  const long long d1 = inst.delta1();
  const long long d2 = inst.delta2();
  const long long n = inst.n();
  profile.bec = (d1 + 1) * (d2 + 1) <= n + 1;
  profile.sauer_spencer = 2 * d1 * d2 < n;

  const auto blue_cycle = find_even_short_cycle(inst.blue());
  const auto red_cycle = find_even_short_cycle(inst.red());
  profile.girth_ok_blue = !blue_cycle.has_value();
  profile.girth_ok_red = !red_cycle.has_value();
  profile.thm12_degree_ok = d1 >= kDelta1Threshold || d2 >= kDelta2Threshold;

  // Only C4-freeness of blue matters here, not the longer cycles.
  bool blue_c4_free;
  if (profile.girth_ok_blue) {
    blue_c4_free = true;
  } else if (blue_cycle->length() == 4) {
    blue_c4_free = false;
  } else {
    blue_c4_free = !has_c4(inst.blue());
  }
  profile.thm13_applicable = blue_c4_free && d1 > 34 * d2;
  return profile;
}

}  // namespace graphpack
