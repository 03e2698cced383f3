#include <benchmark/benchmark.h>

#include "ordsup/cyclic.hpp"
#include "ordsup/families.hpp"
#include "ordsup/supergraph.hpp"

using namespace ordsup;

static void BM_SeparabilityDirect(benchmark::State& state) {
  SimpleGraph sg = order_supergraph(make_dihedral(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_cyclically_separable(sg).separable);
  }
}
BENCHMARK(BM_SeparabilityDirect)->Arg(15)->Arg(60)->Arg(63);

static void BM_SeparabilityQuotient(benchmark::State& state) {
  QuotientOrderGraph q =
      order_quotient_graph(dihedral_order_profile(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quotient_is_cyclically_separable(q).separable);
  }
}
BENCHMARK(BM_SeparabilityQuotient)->Arg(60)->Arg(720);

static void BM_BruteForceOracle(benchmark::State& state) {
  SimpleGraph sg = order_supergraph(make_dihedral(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        brute_force_ckappa(sg, sg.vertex_count()).status);
  }
}
BENCHMARK(BM_BruteForceOracle)->Arg(6)->Arg(8);

static void BM_CkappaPairSearch(benchmark::State& state) {
  SimpleGraph sg = order_supergraph(make_dicyclic(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclic_vertex_connectivity(sg).infinite());
  }
}
BENCHMARK(BM_CkappaPairSearch)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
