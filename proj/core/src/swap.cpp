#include "graphpack/swap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "graphpack/analyzer.hpp"

namespace graphpack {

void SwapCycle::validate() const {
  if (labels_.size() < 2 || labels_.size() > 3)
    throw std::invalid_argument("SwapCycle: length must be 2 or 3");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 0) throw std::invalid_argument("SwapCycle: negative label");
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("SwapCycle: repeated label");
  }
}

void apply_swap_inplace(Labelling& lab, const SwapCycle& cycle) {
  const auto& labels = cycle.labels();
  const int l = cycle.length();
  std::vector<int> vertices(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) vertices[k] = lab.vertex_of(labels[k]);
  for (int k = 0; k < l; ++k) lab.rebind(vertices[k], labels[(k + 1) % l]);
}

void apply_swap_inverse(Labelling& lab, const SwapCycle& cycle) {
  const auto& labels = cycle.labels();
  const int l = cycle.length();
  std::vector<int> vertices(static_cast<std::size_t>(l));
  for (int k = 0; k < l; ++k) vertices[k] = lab.vertex_of(labels[k]);
  for (int k = 0; k < l; ++k) lab.rebind(vertices[k], labels[(k + l - 1) % l]);
}

Labelling apply_swap(const Labelling& lab, const SwapCycle& cycle) {
  for (int label : cycle.labels())
    if (label >= lab.size()) throw std::out_of_range("apply_swap: label out of range");
  Labelling out = lab;
  apply_swap_inplace(out, cycle);
  return out;
}

bool is_safe_swap(const PackingInstance& inst, const Labelling& lab,
                  const SwapCycle& cycle) {
  const auto& u = cycle.labels();
  const int l = cycle.length();
  for (int k = 0; k < l; ++k)
    if (red_blue_link(inst, lab, u[k], u[(k + 1) % l])) return false;
  for (int k = 0; k < l; ++k)
    for (int k2 = 0; k2 < l; ++k2) {
      if (k == k2) continue;
      if (inst.red_label_edge(lab, u[k], u[k2]) &&
          inst.blue().has_edge(u[(k + 1) % l], u[(k2 + 1) % l]))
        return false;
    }
  return true;
}

namespace {

// Distinct purple edges incident to the given labels under the current
// labelling.
int purple_incident_count(const PackingInstance& inst, const Labelling& lab,
                          const std::vector<int>& labels) {
  std::set<std::pair<int, int>> seen;
  for (int a : labels)
    for (int j : inst.blue().adj(a))
      if (inst.red_label_edge(lab, a, j))
        seen.emplace(std::min(a, j), std::max(a, j));
  return static_cast<int>(seen.size());
}

}  // namespace

int purple_delta(const PackingInstance& inst, Labelling& lab, const SwapCycle& cycle) {
  const int before = purple_incident_count(inst, lab, cycle.labels());
  apply_swap_inplace(lab, cycle);
  const int after = purple_incident_count(inst, lab, cycle.labels());
  apply_swap_inverse(lab, cycle);
  return after - before;
}

std::optional<SwapCycle> find_reducing_2swap(const PackingInstance& inst,
                                             const Labelling& lab) {
  const int n = inst.n();
  Labelling scratch = lab;

  std::vector<char> purple_incident(static_cast<std::size_t>(n), 0);
  bool any_purple = false;
  for (const auto& [a, b] : inst.blue().edges()) {
    if (inst.red_label_edge(lab, a, b)) {
      purple_incident[a] = purple_incident[b] = 1;
      any_purple = true;
    }
  }
  if (!any_purple) return std::nullopt;

  auto try_pair = [&](int u, int w) -> bool {
    SwapCycle cycle(u, w);
    return purple_delta(inst, scratch, cycle) < 0;
  };

  std::vector<int> partners(static_cast<std::size_t>(n));
  for (int w = 0; w < n; ++w) partners[w] = w;

  for (int u = 0; u < n; ++u) {
    if (!purple_incident[u]) continue;
    // Partners with no link either way first (the certificate-style
    // candidates), then the rest, each group in ascending label order.
    std::stable_sort(partners.begin(), partners.end(), [&](int x, int y) {
      auto linked = [&](int w) {
        return w == u || red_blue_link(inst, lab, u, w) || blue_red_link(inst, lab, u, w);
      };
      return linked(x) < linked(y);
    });
    for (int w : partners) {
      if (w == u) continue;
      if (try_pair(u, w)) return SwapCycle(u, w);
    }
    std::sort(partners.begin(), partners.end());
  }
  // Pairs with neither label purple-incident cannot reduce: the swap only
  // changes status of edges at the two labels, and none of those are purple.
  return std::nullopt;
}

std::optional<SwapCycle> find_claim32_3swap(const PackingInstance& inst,
                                            const Labelling& lab, int u) {
  bool incident = false;
  for (int j : inst.blue().adj(u))
    if (inst.red_label_edge(lab, u, j)) {
      incident = true;
      break;
    }
  if (!incident)
    throw std::invalid_argument("find_claim32_3swap: u is not purple-incident");

  const NeighborhoodProfile pu = profile(inst, lab, u);
  Labelling scratch = lab;
  for (int a : pu.a_star.members()) {
    if (a == u) continue;
    for (int b : pu.b_set.members()) {
      if (b == u || b == a) continue;
      if (red_blue_link(inst, lab, a, b)) continue;
      SwapCycle cycle(u, a, b);
      if (purple_delta(inst, scratch, cycle) < 0) return cycle;
    }
  }
  return std::nullopt;
}

}  // namespace graphpack
