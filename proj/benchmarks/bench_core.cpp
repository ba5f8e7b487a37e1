#include "circlight/circlight.hpp"

#include <benchmark/benchmark.h>

using namespace circlight;

static void BM_GTilde(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(g_tilde(16.0, n));
}
BENCHMARK(BM_GTilde)->Arg(8)->Arg(64)->Arg(512);

static void BM_EntanglementRics(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_rics({n, n / 2, 3.0}).e_bits);
}
BENCHMARK(BM_EntanglementRics)->Arg(8)->Arg(80)->Arg(512);

static void BM_KerrEigen(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_kerr(n, 4.0).e_bits);
}
BENCHMARK(BM_KerrEigen)->Arg(16)->Arg(64)->Arg(120);

static void BM_FockOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = rics_coefficients({n, 1, 2.5});
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_fock(s).e_bits);
}
BENCHMARK(BM_FockOracle)->Arg(2)->Arg(10);

BENCHMARK_MAIN();
