#include "wfinite/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "wfinite/error.hpp"

namespace wfinite {

SortedSamples simulate_process(const RateFunction& rate, double horizon,
                               SpikeSeed seed) {
  Engine engine(seed);
  return simulate_process(rate, horizon, engine);
}

SortedSamples simulate_process(const RateFunction& rate, double horizon,
                               Engine& engine) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) {
    raise(ErrorKind::kDomain, "horizon must be positive and finite");
  }
  const double total = rate.cumulative(horizon);
  if (total <= 0.0) return {};

  std::poisson_distribution<long long> count_dist(total);
  const long long count = count_dist(engine);
  std::vector<double> times;
  times.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) {
    double u = engine.uniform() * total;
    if (u >= total) u = std::nextafter(total, 0.0);
    times.push_back(rate.inverse_cumulative(u));
  }
  std::sort(times.begin(), times.end());
  return SortedSamples::from_sorted(std::move(times));
}

double sample_kth_arrival(double rate, int k, SpikeSeed seed) {
  Engine engine(seed);
  return sample_kth_arrival(rate, k, engine);
}

double sample_kth_arrival(double rate, int k, Engine& engine) {
  if (!(rate > 0.0) || !std::isfinite(rate)) raise(ErrorKind::kDomain, "rate must be positive");
  if (k < 1) raise(ErrorKind::kDomain, "arrival order must be >= 1");
  double sum = 0.0;
  for (int i = 0; i < k; ++i) sum += engine.exponential();
  return sum / rate;
}

SortedSamples first_arrivals(double rate, int n, Engine& engine) {
  if (!(rate > 0.0) || !std::isfinite(rate)) raise(ErrorKind::kDomain, "rate must be positive");
  if (n < 1) raise(ErrorKind::kDomain, "need at least one arrival");
  std::vector<double> times(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (auto& t : times) {
    sum += engine.exponential();
    t = sum / rate;
  }
  return SortedSamples::from_sorted(std::move(times));
}

}  // namespace wfinite
