#include "graphpack/solver.hpp"

#include <stdexcept>

#include "graphpack/analyzer.hpp"
#include "graphpack/rng.hpp"

namespace graphpack {

namespace {

StuckCertificate make_certificate(const PackingInstance& inst, const Labelling& lab,
                                  int u, int v) {
  StuckCertificate cert;
  cert.u = u;
  cert.v = v;

  cert.claim31_ok = true;
  for (int w = 0; w < inst.n(); ++w) {
    if (w == v) continue;
    if (!red_blue_link(inst, lab, u, w) && !blue_red_link(inst, lab, u, w)) {
      cert.claim31_ok = false;
      break;
    }
  }

  const NeighborhoodProfile pu = profile(inst, lab, u);
  cert.a_star_size = pu.a_star.count();
  cert.b_star_size = pu.b_star.count();
  cert.a_size = pu.a_set.count();
  cert.b_size = pu.b_set.count();

  cert.claim32_ok = true;
  for (int a : pu.a_star.members()) {
    for (int b : pu.b_set.members()) {
      if (!red_blue_link(inst, lab, a, b)) {
        cert.claim32_ok = false;
        break;
      }
    }
    if (!cert.claim32_ok) break;
  }
  return cert;
}

std::optional<SwapCycle> find_reducing_3swap(const PackingInstance& inst,
                                             const Labelling& lab,
                                             const PurpleReport& purple) {
  // Endpoints of the lexicographically first purple edge first, then the
  // rest, mirroring the escalation order of the descent.
  std::vector<int> endpoints;
  for (const auto& [u, v] : purple.purple_edges) {
    endpoints.push_back(u);
    endpoints.push_back(v);
  }
  for (int u : endpoints)
    if (auto cycle = find_claim32_3swap(inst, lab, u)) return cycle;
  return std::nullopt;
}

}  // namespace

SolveOutcome solve(const PackingInstance& inst, const Labelling& init,
                   const DescentPolicy& policy) {
  if (init.size() != inst.n())
    throw std::invalid_argument("solve: labelling size mismatch");

  SolveOutcome outcome;
  Labelling lab = init;
  PurpleReport purple = purple_report(inst, lab);

  while (purple.count > 0) {
    if (policy.max_swaps >= 0 &&
        static_cast<std::int64_t>(outcome.swap_trace.size()) >= policy.max_swaps) {
      outcome.swap_limit_hit = true;
      break;
    }

    std::optional<SwapCycle> move = find_reducing_2swap(inst, lab);
    if (!move && !policy.two_swaps_only)
      move = find_reducing_3swap(inst, lab, purple);
    if (!move) break;

    Labelling scratch = lab;
    const int delta = purple_delta(inst, scratch, *move);
    if (delta >= 0)
      throw std::logic_error("solve: search returned a non-reducing swap");

    apply_swap_inplace(lab, *move);
    outcome.swap_trace.push_back(*move);
    purple = purple_report(inst, lab);
  }

  outcome.final_labelling = lab;
  outcome.purple_final = purple;
  if (purple.count == 0) {
    outcome.status = SolveStatus::packed;
    if (!is_packing(inst, lab))
      throw std::logic_error("solve: packed outcome failed re-verification");
  } else if (purple.max_purple_degree <= 1) {
    outcome.status = SolveStatus::near_packed;
  } else {
    outcome.status = SolveStatus::stuck;
  }
  // In two-swaps-only mode a 3-swap may still exist, so the certificate's
  // exhaustion premise would not hold; emit none.
  if (outcome.status != SolveStatus::packed && !outcome.swap_limit_hit &&
      !policy.two_swaps_only) {
    const auto& [u, v] = purple.purple_edges.front();
    outcome.stuck_certificate = make_certificate(inst, lab, u, v);
  }
  return outcome;
}

SolveOutcome solve_multistart(const PackingInstance& inst, int restarts,
                              std::uint64_t seed, const DescentPolicy& policy) {
  if (restarts < 1) throw std::invalid_argument("solve_multistart: restarts must be >= 1");
  Rng rng(seed);
  std::optional<SolveOutcome> best;
  for (int r = 0; r < restarts; ++r) {
    Labelling init{rng.permutation(inst.n())};
    SolveOutcome outcome = solve(inst, init, policy);
    const auto rank = [](const SolveOutcome& o) {
      return std::pair<int, int>(static_cast<int>(o.status), o.purple_final.count);
    };
    if (!best || rank(outcome) < rank(*best)) best = std::move(outcome);
    if (best->status == SolveStatus::packed) break;
  }
  return *best;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::packed: return "packed";
    case SolveStatus::near_packed: return "near_packed";
    case SolveStatus::stuck: return "stuck";
  }
  return "?";
}

}  // namespace graphpack
