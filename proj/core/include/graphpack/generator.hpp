#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "graphpack/graph.hpp"

namespace graphpack {

struct GenSpec {
  int n = 1;
  int delta_cap = 0;
  bool forbid_even_short_cycles = false;
  std::uint64_t seed = 0;
  std::optional<int> edge_budget;
};

struct GenResult {
  Graph graph;
  /// Set when edge_budget was requested but unreachable after a full pass
  /// over all candidate edges.
  bool budget_shortfall = false;
};

/// Random-order greedy edge insertion. An edge is accepted iff both endpoints
/// are under delta_cap and, when forbid_even_short_cycles is set, inserting it
/// closes no 4-, 6- or 8-cycle. Deterministic in the seed.
GenResult generate(const GenSpec& spec);

enum class Family { matching, cycle, path, star, complete, edgeless };

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/// Named graph on n vertices. Throws std::invalid_argument when n is
/// incompatible (matching needs even n, cycle needs n >= 3).
Graph standard_family(Family family, int n);

}  // namespace graphpack
