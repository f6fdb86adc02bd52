#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "graphpack/packing.hpp"
#include "graphpack/swap.hpp"

namespace graphpack {

enum class SolveStatus { packed, near_packed, stuck };

/// Structural witness emitted when the descent exhausts its moves at a purple
/// edge (u,v): no reducing 2-swap exists anywhere and no (u,a,b) 3-swap
/// exists at u or v. Both flags are then expected to be true (the
/// contrapositive of the swap-safety guarantee: a missing link would permit
/// a safe, strictly reducing swap).
struct StuckCertificate {
  int u = -1, v = -1;
  bool claim31_ok = false;  // every w != v has a red-blue- or blue-red-link from u
  bool claim32_ok = false;  // every (a in A*(u), b in B(u)) pair is red-blue-linked
  int a_star_size = 0;
  int b_star_size = 0;
  int a_size = 0;
  int b_size = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::stuck;
  Labelling final_labelling;
  PurpleReport purple_final;
  std::vector<SwapCycle> swap_trace;
  std::optional<StuckCertificate> stuck_certificate;
  /// Set when the max_swaps safety valve fired; the outcome is then a
  /// truncated descent and carries no certificate.
  bool swap_limit_hit = false;
};

struct DescentPolicy {
  /// Restrict the move set to reducing 2-swaps (the near-packing descent).
  bool two_swaps_only = false;
  /// Safety valve; < 0 means unlimited. Descent is finite regardless since
  /// every applied swap strictly decreases the purple count.
  std::int64_t max_swaps = -1;
};

/// Monotone purple-minimizing descent. Move priority: reducing 2-swaps
/// (purple-incident labels first), then (u,a,b) 3-swaps at each endpoint of
/// the lexicographically first purple edge, then at the remaining purple
/// endpoints.
SolveOutcome solve(const PackingInstance& inst, const Labelling& init,
                   const DescentPolicy& policy = {});

/// Runs solve from `restarts` seeded random initial labellings and returns
/// the best outcome by (status, purple count). Deterministic in seed.
SolveOutcome solve_multistart(const PackingInstance& inst, int restarts,
                              std::uint64_t seed, const DescentPolicy& policy = {});

const char* to_string(SolveStatus status);

}  // namespace graphpack
