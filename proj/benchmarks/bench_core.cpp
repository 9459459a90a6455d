#include <benchmark/benchmark.h>

#include "pbt/gue.hpp"
#include "pbt/performance.hpp"
#include "pbt/schur_weyl.hpp"
#include "pbt/spectral.hpp"

static void BM_FStd(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pbt::f_std(d, N).value);
}
BENCHMARK(BM_FStd)->Args({2, 200})->Args({3, 200})->Args({5, 100})->Unit(benchmark::kMillisecond);

static void BM_PEpr(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(pbt::p_epr(d, N).value);
}
BENCHMARK(BM_PEpr)->Args({3, 200})->Args({5, 100})->Unit(benchmark::kMillisecond);

static void BM_SpectralOptimum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  pbt::SpectralOptions opts;
  opts.check_degeneracy = false;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pbt::optimal_fidelity_spectral(d, N, opts).point.value);
  }
}
BENCHMARK(BM_SpectralOptimum)->Args({2, 200})->Args({3, 80})->Args({4, 40})->Unit(benchmark::kMillisecond);

static void BM_SchurWeylTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pbt::SchurWeylTable(3, n).size());
}
BENCHMARK(BM_SchurWeylTable)->Arg(60)->Arg(400)->Unit(benchmark::kMillisecond);

static void BM_GueLambdaMax(benchmark::State& state) {
  const pbt::Gue0Sampler sampler(static_cast<int>(state.range(0)), 1);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(pbt::lambda_max(sampler.sample(i++)));
}
BENCHMARK(BM_GueLambdaMax)->Arg(2)->Arg(3)->Arg(5);
BENCHMARK_MAIN();
