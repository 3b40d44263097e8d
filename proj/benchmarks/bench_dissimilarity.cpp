#include <benchmark/benchmark.h>

#include "wfinite/dissimilarity.hpp"
#include "wfinite/poisson.hpp"

namespace {

using namespace wfinite;

SortedSamples train(double rate, std::uint64_t seed) {
  return simulate_process(RateFunction::constant(rate), 1.0, SpikeSeed{seed, 0});
}

void BM_VictorPurpura(benchmark::State& state) {
  const auto x = train(static_cast<double>(state.range(0)), 1);
  const auto y = train(static_cast<double>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(victor_purpura(x, y, 10.0));
}
BENCHMARK(BM_VictorPurpura)->Arg(100)->Arg(1000);

void BM_KfsDistance(benchmark::State& state) {
  const auto x = train(static_cast<double>(state.range(0)), 3);
  const auto y = train(static_cast<double>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(kfs_distance(x, y, 0.05));
}
BENCHMARK(BM_KfsDistance)->Arg(100)->Arg(1000);

void BM_BinnedJs(benchmark::State& state) {
  const auto x = train(100, 5), y = train(100, 6);
  for (auto _ : state) benchmark::DoNotOptimize(binned_js_divergence(x, y, 10));
}
BENCHMARK(BM_BinnedJs);

void BM_Hausdorff(benchmark::State& state) {
  const auto x = train(100, 7), y = train(100, 8);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(x, y));
}
BENCHMARK(BM_Hausdorff);

}  // namespace
