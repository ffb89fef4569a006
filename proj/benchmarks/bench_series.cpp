#include <benchmark/benchmark.h>

#include "ellgen/kummer_genus.hpp"

using namespace ellgen;

static void BM_QYMultiply(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const QYSeries a = psi_squared(q);
  const QYSeries b = ell_surface(surfaces::k3(), q);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QYMultiply)->Arg(4)->Arg(8)->Arg(16);

static void BM_EllSurface(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ell_surface(surfaces::p2(), q));
}
BENCHMARK(BM_EllSurface)->Arg(4)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_KummerHecke(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kummer_hecke(n, 3));
}
BENCHMARK(BM_KummerHecke)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_HilbertLogTwisted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SurfaceOracle oracle(surfaces::p2());
  for (auto _ : state)
    benchmark::DoNotOptimize(hilbert_log_twisted(oracle, {n, 3, 1}));
}
BENCHMARK(BM_HilbertLogTwisted)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
