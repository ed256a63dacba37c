// Microbenchmarks for the hot paths: diagram resolution, the state-sum
// oracle, Groebner bases, Tor1, and the full verdict pipeline.
//
// resolve() and trace_poly() memoize globally, so the resolution
// benchmarks go through resolve_choosing(..., memoize = false) and the
// algebraic benchmarks rebuild their ideals every iteration; cached work
// would otherwise collapse to a map lookup after the first pass.
#include <benchmark/benchmark.h>

#include "skein/hochschild.hpp"

using namespace skein;

namespace {

// (1,-k) under (1,-1): k + 3 crossings, meridian-entangled throughout.
AnnulusDiagram torus_braid(int winds) {
  return layered_diagram({{1, -winds}, {1, -1}});
}

std::size_t first_crossing(const AnnulusDiagram&) { return 0; }

void BM_resolve(benchmark::State& state) {
  AnnulusDiagram d = torus_braid(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(resolve_choosing(d, first_crossing, false));
}

void BM_state_sum(benchmark::State& state) {
  AnnulusDiagram d = torus_braid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(state_sum(d));
}

void BM_handlebody_groebner(benchmark::State& state) {
  GluingMatrix g = GluingMatrix::parse("1,2;1,1");
  for (auto _ : state) {
    Ideal k = handlebody_ideal(g, Side::H1);
    benchmark::DoNotOptimize(k.groebner_basis());
  }
}

void BM_tor1_lens(benchmark::State& state) {
  GluingMatrix g = GluingMatrix::parse("1,2;1,1");
  for (auto _ : state) {
    Ideal j = handlebody_ideal(g, Side::H0);
    Ideal k = handlebody_ideal(g, Side::H1);
    benchmark::DoNotOptimize(tor1_module_bounded(j, k, torus_relation(), 8));
  }
}

void BM_verdict(benchmark::State& state, const char* name) {
  for (auto _ : state) benchmark::DoNotOptimize(torsion_verdict(preset(name)));
}

}  // namespace

BENCHMARK(BM_resolve)->Arg(1)->Arg(5)->Arg(9);
BENCHMARK(BM_state_sum)->Arg(1)->Arg(5)->Arg(9);
BENCHMARK(BM_handlebody_groebner);
BENCHMARK(BM_tor1_lens);
BENCHMARK_CAPTURE(BM_verdict, lens21, "lens:2,1");
BENCHMARK_CAPTURE(BM_verdict, s1xs2, "s1xs2");

BENCHMARK_MAIN();
