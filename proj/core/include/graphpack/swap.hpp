#pragma once

#include <optional>
#include <vector>

#include "graphpack/packing.hpp"

namespace graphpack {

/// Cyclic relabelling of 2 or 3 distinct labels: the vertex labelled
/// labels[k] is reassigned labels[(k+1) mod l].
class SwapCycle {
 public:
  SwapCycle(int u, int w) : labels_{u, w} { validate(); }
  SwapCycle(int u, int a, int b) : labels_{u, a, b} { validate(); }
  explicit SwapCycle(std::vector<int> labels) : labels_(std::move(labels)) { validate(); }

  int length() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }

 private:
  void validate() const;
  std::vector<int> labels_;
};

/// Returns the labelling after the cycle. Applying the same cycle length()
/// times round-trips to the input.
Labelling apply_swap(const Labelling& lab, const SwapCycle& cycle);

/// In-place variants used by the search loops; apply_swap_inverse undoes
/// apply_swap_inplace exactly.
void apply_swap_inplace(Labelling& lab, const SwapCycle& cycle);
void apply_swap_inverse(Labelling& lab, const SwapCycle& cycle);

/// The swap-safety test: true iff for all k, k'
///   (a) there is no red-blue-link from u_k to u_{k+1}, and
///   (b) u_k u_{k'} red implies u_{k+1} u_{k'+1} not blue,
/// indices mod length, under the current labelling. When true, the swap
/// leaves no purple edge incident to any swapped label.
bool is_safe_swap(const PackingInstance& inst, const Labelling& lab,
                  const SwapCycle& cycle);

/// Change in total purple count if `cycle` were applied. Only edges incident
/// to swapped labels can change status, so this is a local recount.
int purple_delta(const PackingInstance& inst, Labelling& lab, const SwapCycle& cycle);

/// Any 2-cycle that strictly decreases the purple count, or nullopt.
/// Exhaustive: pairs touching purple-incident labels first (partner ordered
/// no-link-to-u first, then ascending), then all remaining pairs.
std::optional<SwapCycle> find_reducing_2swap(const PackingInstance& inst,
                                             const Labelling& lab);

/// A (u,a,b) 3-swap with a in A*(u), b in B(u) and no red-blue-link from a to
/// b, verified to strictly reduce the purple count. Throws
/// std::invalid_argument when u is not incident to a purple edge.
std::optional<SwapCycle> find_claim32_3swap(const PackingInstance& inst,
                                            const Labelling& lab, int u);

}  // namespace graphpack
