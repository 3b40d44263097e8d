#include <benchmark/benchmark.h>

#include <random>

#include "wfinite/poisson.hpp"
#include "wfinite/transport.hpp"

namespace {

using namespace wfinite;

EmpiricalMeasure random_measure(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (double& x : v) x = g(rng);
  return make_uniform_empirical(v);
}

void BM_W1General(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_measure(n, 1), b = random_measure(n + n / 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(w1_general(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_W1General)->RangeMultiplier(8)->Range(8, 1 << 15)->Complexity();

void BM_NorthwestCornerPlan(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_measure(n, 3), b = random_measure(n + n / 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(northwest_corner_plan(a, b));
}
BENCHMARK(BM_NorthwestCornerPlan)->RangeMultiplier(8)->Range(8, 1 << 15);

void BM_W1EqualSize(benchmark::State& state) {
  Engine e(SpikeSeed{5, 0});
  const auto x = first_arrivals(1.0, static_cast<int>(state.range(0)), e);
  const auto y = first_arrivals(2.0, static_cast<int>(state.range(0)), e);
  for (auto _ : state) benchmark::DoNotOptimize(w1_equal_size(x, y));
}
BENCHMARK(BM_W1EqualSize)->Arg(20)->Arg(1000)->Arg(100000);

void BM_SimulateProcess(benchmark::State& state) {
  const auto rate = RateFunction::piecewise_linear({0.0, 0.5, 1.0}, {50.0, 150.0, 100.0});
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_process(rate, 1.0, SpikeSeed{6, i++}));
}
BENCHMARK(BM_SimulateProcess);

}  // namespace
