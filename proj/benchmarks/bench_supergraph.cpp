#include <benchmark/benchmark.h>

#include "ordsup/families.hpp"
#include "ordsup/supergraph.hpp"

using namespace ordsup;

static void BM_DihedralSupergraph(benchmark::State& state) {
  Group g = make_dihedral(state.range(0));
  for (auto _ : state) {
    SimpleGraph sg = order_supergraph(g);
    benchmark::DoNotOptimize(sg.edge_count());
  }
}
BENCHMARK(BM_DihedralSupergraph)->Arg(32)->Arg(64)->Arg(256);

static void BM_SymmetricClosure(benchmark::State& state) {
  for (auto _ : state) {
    Group g = make_symmetric(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SymmetricClosure)->Arg(6)->Arg(7);

static void BM_QuotientExpansion(benchmark::State& state) {
  OrderProfile profile = cyclic_order_profile(state.range(0));
  QuotientOrderGraph q = order_quotient_graph(profile);
  for (auto _ : state) {
    ExpandedGraph ex = expand(q);
    benchmark::DoNotOptimize(ex.graph.edge_count());
  }
}
BENCHMARK(BM_QuotientExpansion)->Arg(120)->Arg(360);
