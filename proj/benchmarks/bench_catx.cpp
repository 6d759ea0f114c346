#include <benchmark/benchmark.h>

#include "catx/charcalc.hpp"
#include "catx/incidence.hpp"
#include "catx/modules.hpp"

using namespace catx;

namespace {

const char* kTypes[] = {"A2", "A3", "B3", "A4", "B4", "F4"};

void BM_EnumerateWeyl(benchmark::State& state) {
  const RootSystem rs = build_root_system(CartanType::parse(kTypes[state.range(0)]));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_weyl(rs));
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_EnumerateWeyl)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_EnumerateBiclosed(benchmark::State& state) {
  const char* name = state.range(0) == 0 ? "A3" : "B3";
  const WeylGroup W(CartanType::parse(name));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_biclosed(W));
  state.SetLabel(name);
}
BENCHMARK(BM_EnumerateBiclosed)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_FiltrationSweep(benchmark::State& state) {
  const WeylGroup W(CartanType::parse(kTypes[state.range(0)]));
  for (auto _ : state) {
    for (IndexSet itheta : W.simple_indices().subsets()) {
      benchmark::DoNotOptimize(verify_filtration(W, FormalCharacter{"theta", itheta}));
    }
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(BM_FiltrationSweep)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_OrderAxioms(benchmark::State& state) {
  const WeylGroup W(CartanType::parse("B3"));
  const auto weights = sweep_weights(W, FormalCharacter{"theta", W.simple_indices()});
  for (auto _ : state) benchmark::DoNotOptimize(check_order_axioms(W, weights, 10000, 1));
}
BENCHMARK(BM_OrderAxioms)->Unit(benchmark::kMillisecond);

void BM_Heredity(benchmark::State& state) {
  const IncidenceAlgebra A = build_incidence_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(heredity_chain_check(A));
}
BENCHMARK(BM_Heredity)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_CartanExt(benchmark::State& state) {
  const IncidenceAlgebra A = build_incidence_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cartan_and_ext(A));
}
BENCHMARK(BM_CartanExt)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_KrullSchmidtRegular(benchmark::State& state) {
  const IncidenceAlgebra A = build_incidence_algebra(static_cast<int>(state.range(0)));
  const AlgebraModule M = regular_module(A);
  for (auto _ : state) benchmark::DoNotOptimize(krull_schmidt_decompose(A, M, 1));
}
BENCHMARK(BM_KrullSchmidtRegular)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
