#include "graphpack/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphpack {

namespace {

struct SearchState {
  const PackingInstance& inst;
  const OracleOptions& options;
  std::vector<int> order;        // red vertices, descending red degree
  std::vector<int> assignment;   // red vertex -> label, -1 unassigned
  std::vector<char> label_used;
  int best = 0;
  std::vector<int> best_assignment;
  std::uint64_t nodes = 0;
  bool budget_hit = false;

  int purple_with(int vertex, int label) const {
    int count = 0;
    for (int nbr : inst.red().adj(vertex)) {
      const int other = assignment[nbr];
      if (other >= 0 && inst.blue().has_edge(label, other)) ++count;
    }
    return count;
  }

  void dfs(std::size_t depth, int purple_so_far) {
    if (budget_hit) return;
    if (options.node_budget && nodes >= options.node_budget) {
      budget_hit = true;
      return;
    }
    ++nodes;
    if (options.prune && purple_so_far >= best) return;
    if (depth == order.size()) {
      if (purple_so_far < best) {
        best = purple_so_far;
        best_assignment = assignment;
      }
      return;
    }
    const int vertex = order[depth];
    for (int label = 0; label < inst.n(); ++label) {
      if (label_used[label]) continue;
      const int added = purple_with(vertex, label);
      assignment[vertex] = label;
      label_used[label] = 1;
      dfs(depth + 1, purple_so_far + added);
      assignment[vertex] = -1;
      label_used[label] = 0;
      if (budget_hit) return;
      if (options.prune && best == 0) return;  // cannot improve on a packing
    }
  }
};

}  // namespace

OracleResult exact_pack(const PackingInstance& inst, const OracleOptions& options) {
  const int n = inst.n();
  if (n > options.limit)
    throw std::invalid_argument("exact_pack: instance exceeds size limit");

  SearchState state{inst, options};
  state.order.resize(static_cast<std::size_t>(n));
  std::iota(state.order.begin(), state.order.end(), 0);
  std::stable_sort(state.order.begin(), state.order.end(), [&](int a, int b) {
    return inst.red().degree(a) > inst.red().degree(b);
  });
  state.assignment.assign(static_cast<std::size_t>(n), -1);
  state.label_used.assign(static_cast<std::size_t>(n), 0);
  state.best = inst.red().edge_count() + 1;
  state.dfs(0, 0);

  OracleResult result;
  result.nodes_explored = state.nodes;
  result.complete = !state.budget_hit;
  result.min_purple = state.best;
  result.packable = state.best == 0;
  if (!state.best_assignment.empty())
    result.witness = Labelling(state.best_assignment);
  return result;
}

std::vector<Labelling> min_purple_labellings(const PackingInstance& inst) {
  const int n = inst.n();
  if (n > 8) throw std::invalid_argument("min_purple_labellings: requires n <= 8");

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  int best = inst.red().edge_count() + 1;
  std::vector<Labelling> optima;
  do {
    Labelling lab{perm};
    int count = 0;
    for (const auto& [u, v] : inst.blue().edges())
      if (inst.red_label_edge(lab, u, v)) ++count;
    if (count < best) {
      best = count;
      optima.clear();
    }
    if (count == best) optima.push_back(std::move(lab));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return optima;
}

bool verify_eaton_smallscale(const PackingInstance& inst) {
  const long long d1 = inst.delta1();
  const long long d2 = inst.delta2();
  if ((d1 + 1) * (d2 + 1) > inst.n() + 1)
    throw std::invalid_argument("verify_eaton_smallscale: BEC condition does not hold");
  for (const Labelling& lab : min_purple_labellings(inst))
    if (purple_report(inst, lab).max_purple_degree > 1) return false;
  return true;
}

}  // namespace graphpack
