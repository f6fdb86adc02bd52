#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphpack/packing.hpp"

namespace graphpack {

struct OracleResult {
  bool packable = false;
  int min_purple = 0;
  std::optional<Labelling> witness;
  std::uint64_t nodes_explored = 0;
  /// Full search completed; min_purple is exact. When false (node budget
  /// exhausted) min_purple is an upper bound and packable is only meaningful
  /// if it is true.
  bool complete = false;
};

struct OracleOptions {
  /// Hard size limit for exact search; exceeded => size error.
  int limit = 12;
  /// Disable branch-and-bound pruning (plain exhaustive enumeration); used by
  /// the self-equivalence checks.
  bool prune = true;
  /// Optional cap on explored nodes; 0 means unlimited.
  std::uint64_t node_budget = 0;
};

/// Exact packability and minimum purple count via backtracking over partial
/// injections of red vertices into labels, in descending red-degree order.
/// Throws std::invalid_argument when n exceeds options.limit.
OracleResult exact_pack(const PackingInstance& inst, const OracleOptions& options = {});

/// Every labelling achieving the minimum purple count. Throws when n > 8.
std::vector<Labelling> min_purple_labellings(const PackingInstance& inst);

/// True iff every minimum-purple labelling has max purple degree <= 1,
/// checked exhaustively (n <= 8). Throws std::invalid_argument when the BEC
/// condition fails (the near-packing hypothesis) or n > 8.
bool verify_eaton_smallscale(const PackingInstance& inst);

}  // namespace graphpack
