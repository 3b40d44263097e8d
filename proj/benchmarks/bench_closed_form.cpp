#include <benchmark/benchmark.h>

#include "wfinite/closed_form.hpp"

namespace {

using namespace wfinite;

void BM_ExpectedDistance(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expected_distance(0.3, 0.8, k, k));
}
BENCHMARK(BM_ExpectedDistance)->Arg(1)->Arg(100)->Arg(5000);

void BM_ExpectedWasserstein(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expected_wasserstein(1.0, 2.0, n));
}
BENCHMARK(BM_ExpectedWasserstein)->Arg(20)->Arg(400);

void BM_ShiftedExpectedDistance(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(shifted_expected_distance(0.3, 0.8, k, k, 2.5));
}
BENCHMARK(BM_ShiftedExpectedDistance)->Arg(1)->Arg(30);

void BM_TimeVaryingQuadrature(benchmark::State& state) {
  const auto mu = RateFunction::piecewise_linear({0.0, 4.0, 10.0}, {2.0, 6.0, 3.0});
  const auto nu = RateFunction::piecewise_linear({1.0, 3.0, 12.0}, {8.0, 1.0, 4.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_distance_time_varying(mu, nu, 1, 1, DistancePower::kSquared));
  }
}
BENCHMARK(BM_TimeVaryingQuadrature)->Unit(benchmark::kMillisecond);

}  // namespace
