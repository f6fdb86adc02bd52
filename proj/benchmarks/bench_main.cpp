#include <benchmark/benchmark.h>

#include "graphpack/analyzer.hpp"
#include "graphpack/generator.hpp"
#include "graphpack/oracle.hpp"
#include "graphpack/rng.hpp"
#include "graphpack/solver.hpp"
#include "graphpack/swap.hpp"

using namespace graphpack;

namespace {

PackingInstance make_instance(int n, int cap, bool girth, std::uint64_t seed) {
  return PackingInstance(generate({n, cap, girth, seed * 2 + 1, {}}).graph,
                         generate({n, cap, girth, seed * 2 + 2, {}}).graph);
}

void BM_generate_girth_constrained(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const GenResult result = generate({n, 6, true, seed++, {}});
    benchmark::DoNotOptimize(result.graph.edge_count());
  }
}
BENCHMARK(BM_generate_girth_constrained)->Arg(100)->Arg(500)->Arg(2000);

void BM_find_even_short_cycle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // Degree-capped but unconstrained graphs, so cycles are usually present.
  const Graph g = generate({n, 6, false, 7, {}}).graph;
  for (auto _ : state) benchmark::DoNotOptimize(find_even_short_cycle(g));
}
BENCHMARK(BM_find_even_short_cycle)->Arg(100)->Arg(500)->Arg(2000);

void BM_purple_report(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PackingInstance inst = make_instance(n, 5, false, 11);
  Rng rng(3);
  const Labelling lab{rng.permutation(n)};
  for (auto _ : state) benchmark::DoNotOptimize(purple_report(inst, lab).count);
}
BENCHMARK(BM_purple_report)->Arg(100)->Arg(1000);

void BM_purple_delta(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PackingInstance inst = make_instance(n, 5, false, 13);
  Rng rng(5);
  Labelling lab{rng.permutation(n)};
  const SwapCycle cycle(0, n / 2, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(purple_delta(inst, lab, cycle));
}
BENCHMARK(BM_purple_delta)->Arg(100)->Arg(1000);

void BM_find_reducing_2swap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PackingInstance inst = make_instance(n, 4, false, 17);
  Rng rng(7);
  const Labelling lab{rng.permutation(n)};
  for (auto _ : state) benchmark::DoNotOptimize(find_reducing_2swap(inst, lab));
}
BENCHMARK(BM_find_reducing_2swap)->Arg(60)->Arg(200);

void BM_solve_descent(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PackingInstance inst = make_instance(n, 3, false, 19);
  Rng rng(11);
  for (auto _ : state) {
    const Labelling init{rng.permutation(n)};
    benchmark::DoNotOptimize(solve(inst, init).purple_final.count);
  }
}
BENCHMARK(BM_solve_descent)->Arg(40)->Arg(120);

void BM_audit_claim41(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PackingInstance inst = make_instance(n, 6, true, 23);
  Rng rng(13);
  const Labelling lab{rng.permutation(n)};
  int a = 0;
  for (auto _ : state) {
    const int b = 1 + (a + 7) % (n - 1);
    benchmark::DoNotOptimize(audit_claim41(inst, lab, a, b, 15, true));
    a = (a + 1) % (n - 1);
  }
}
BENCHMARK(BM_audit_claim41)->Arg(200)->Arg(2000);

void BM_exact_pack(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PackingInstance inst = make_instance(n, 3, false, 29);
  OracleOptions options;
  options.limit = 12;
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_pack(inst, options).min_purple);
}
BENCHMARK(BM_exact_pack)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
