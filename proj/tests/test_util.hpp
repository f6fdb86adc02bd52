#pragma once

#include <utility>
#include <vector>

#include "graphpack/graph.hpp"
#include "graphpack/rng.hpp"

namespace graphpack::testutil {

/// Erdos-Renyi-style random graph with edge probability numer/denom.
inline Graph random_graph(Rng& rng, int n, std::uint64_t numer, std::uint64_t denom) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.below(denom) < numer) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Exhaustive oracle: does g contain a cycle on exactly `size` vertices as a
/// subgraph? Enumerates all vertex subsets of that size and backtracks for a
/// spanning cycle within each. Independent of find_even_short_cycle.
bool subset_cycle_exists(const Graph& g, int size);

}  // namespace graphpack::testutil
