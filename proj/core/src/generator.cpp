#include "graphpack/generator.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "graphpack/rng.hpp"

namespace graphpack {

namespace {

// Incremental cycle check against the in-progress adjacency lists (the Graph
// type is immutable, so generation works on raw lists and converts at the
// end). Adding edge uv closes a 4-, 6- or 8-cycle iff there is a simple u-v
// path of length 3, 5 or 7; such a path splits into two half-paths of equal
// length (one from u, one from v) joined by a middle edge, so meeting the two
// enumerations in the middle is exact. All work is proportional to the path
// counts near u and v, never to the graph size, which keeps full-candidate
// sweeps at large n cheap.
class EvenCycleGuard {
 public:
  explicit EvenCycleGuard(const std::vector<std::vector<int>>& adj) : adj_(adj) {}

  bool closes(int u, int v) const {
    for (int half : {1, 2, 3})
      if (halves_meet(u, v, half)) return true;
    return false;
  }

 private:
  // Half-path from an anchor, anchor excluded: up to 3 vertices.
  using Half = std::array<int, 3>;

  void collect(int anchor, int avoid, int half, int depth, Half& current,
               std::vector<Half>& out) const {
    if (depth == half) {
      out.push_back(current);
      return;
    }
    const int prev = depth == 0 ? anchor : current[depth - 1];
    for (int next : adj_[prev]) {
      if (next == anchor || next == avoid) continue;
      bool revisits = false;
      for (int i = 0; i < depth; ++i)
        if (current[i] == next) revisits = true;
      if (revisits) continue;
      current[depth] = next;
      collect(anchor, avoid, half, depth + 1, current, out);
    }
  }

  bool halves_meet(int u, int v, int half) const {
    u_paths_.clear();
    v_paths_.clear();
    Half scratch{};
    collect(u, v, half, 0, scratch, u_paths_);
    if (u_paths_.empty()) return false;
    collect(v, u, half, 0, scratch, v_paths_);
    if (v_paths_.empty()) return false;

    // Epoch-stamped endpoint marks: most u-side endpoints have no v-side
    // endpoint among their neighbors, so the quadratic disjointness pass runs
    // only on actual meeting candidates.
    if (endpoint_epoch_.size() < adj_.size()) endpoint_epoch_.resize(adj_.size(), 0);
    ++epoch_;
    for (const Half& pv : v_paths_) endpoint_epoch_[pv[half - 1]] = epoch_;

    for (const Half& pu : u_paths_) {
      for (int y : adj_[pu[half - 1]]) {
        if (endpoint_epoch_[y] != epoch_) continue;
        for (const Half& pv : v_paths_) {
          if (pv[half - 1] != y) continue;
          bool disjoint = true;
          for (int i = 0; i < half && disjoint; ++i)
            for (int j = 0; j < half; ++j)
              if (pu[i] == pv[j]) {
                disjoint = false;
                break;
              }
          if (disjoint) return true;
        }
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  // Reused across candidates to avoid per-call allocation.
  mutable std::vector<Half> u_paths_;
  mutable std::vector<Half> v_paths_;
  mutable std::vector<std::uint64_t> endpoint_epoch_;
  mutable std::uint64_t epoch_ = 0;
};

}  // namespace

GenResult generate(const GenSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generate: n must be >= 1");
  if (spec.delta_cap < 0) throw std::invalid_argument("generate: negative delta_cap");
  if (spec.edge_budget && *spec.edge_budget < 0)
    throw std::invalid_argument("generate: negative edge_budget");

  Rng rng(spec.seed);
  const int n = spec.n;

  std::vector<std::pair<int, int>> candidates;
  candidates.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  rng.shuffle(candidates);

  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> accepted;
  const int budget = spec.edge_budget.value_or(static_cast<int>(candidates.size()));

  const EvenCycleGuard guard(adj);
  for (const auto& [u, v] : candidates) {
    if (static_cast<int>(accepted.size()) >= budget) break;
    if (static_cast<int>(adj[u].size()) >= spec.delta_cap) continue;
    if (static_cast<int>(adj[v].size()) >= spec.delta_cap) continue;
    if (spec.forbid_even_short_cycles && guard.closes(u, v)) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
    accepted.emplace_back(u, v);
  }

  GenResult result{Graph(n, std::move(accepted)), false};
  if (spec.edge_budget && result.graph.edge_count() < *spec.edge_budget)
    result.budget_shortfall = true;
  return result;
}

Family family_from_name(const std::string& name) {
  if (name == "matching") return Family::matching;
  if (name == "cycle") return Family::cycle;
  if (name == "path") return Family::path;
  if (name == "star") return Family::star;
  if (name == "complete") return Family::complete;
  if (name == "edgeless") return Family::edgeless;
  throw std::invalid_argument("unknown graph family: " + name);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::matching: return "matching";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::complete: return "complete";
    case Family::edgeless: return "edgeless";
  }
  return "?";
}

Graph standard_family(Family family, int n) {
  if (n < 1) throw std::invalid_argument("standard_family: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  switch (family) {
    case Family::matching:
      if (n % 2 != 0) throw std::invalid_argument("matching requires even n");
      for (int i = 0; i + 1 < n; i += 2) edges.emplace_back(i, i + 1);
      break;
    case Family::cycle:
      if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case Family::path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::star:
      for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    case Family::complete:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case Family::edgeless:
      break;
  }
  return Graph(n, std::move(edges));
}

}  // namespace graphpack
