#include <benchmark/benchmark.h>

#include "steklov/dtn.hpp"
#include "steklov/fixtures.hpp"
#include "steklov/flow.hpp"
#include "steklov/harmonics.hpp"
#include "steklov/spectrum.hpp"
#include "steklov/zeta.hpp"

using namespace steklov;

namespace {

ConformalFactor benchFactor(int degree) {
  FixtureRng rng(20251018);
  return randomFactor(rng, degree);
}

void BM_LambdaA(benchmark::State& state) {
  const auto a = benchFactor(6);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lambdaA(a, n));
}
BENCHMARK(BM_LambdaA)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  const auto a = benchFactor(6);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(a, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_Spectrum)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);

void BM_ZetaDiffSweep(benchmark::State& state) {
  const auto spec = spectrum(benchFactor(4), 64);
  const double grid[] = {-3.0, -2.0, -1.5, -1.0, -0.5, 0.5, 2.0, 3.0};
  for (auto _ : state) {
    for (double s : grid) benchmark::DoNotOptimize(zetaDiff(spec, s));
  }
}
BENCHMARK(BM_ZetaDiffSweep);

void BM_TraceFunctional(benchmark::State& state) {
  const auto a = benchFactor(4);
  const auto spec = spectrum(a, 64);
  const auto delta = smoothingDifference(a, 64);
  for (auto _ : state) benchmark::DoNotOptimize(traceFunctional(spec, delta, 2.0));
}
BENCHMARK(BM_TraceFunctional)->Unit(benchmark::kMillisecond);

void BM_QuadraticFormB(benchmark::State& state) {
  const auto b = benchFactor(static_cast<int>(state.range(0))).series();
  for (auto _ : state) benchmark::DoNotOptimize(quadraticFormB(b));
}
BENCHMARK(BM_QuadraticFormB)->Arg(6)->Arg(32);

void BM_Rk4Step(benchmark::State& state) {
  const auto b = benchFactor(6).series();
  for (auto _ : state) benchmark::DoNotOptimize(rk4Step(b, 1e-3));
}
BENCHMARK(BM_Rk4Step);

void BM_AlgebraicInvariant(benchmark::State& state) {
  const auto a = benchFactor(4);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zetaInvariantAlgebraic(a, m));
}
BENCHMARK(BM_AlgebraicInvariant)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);

void BM_KoganZetaMinus1(benchmark::State& state) {
  const auto a = benchFactor(6);
  for (auto _ : state) benchmark::DoNotOptimize(koganZetaMinus1(a));
}
BENCHMARK(BM_KoganZetaMinus1);

void BM_PowerViaResolvent(benchmark::State& state) {
  const auto a = benchFactor(4);
  const int points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(powerViaResolvent(a, 0.5, 32, points, 0.0));
}
BENCHMARK(BM_PowerViaResolvent)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
