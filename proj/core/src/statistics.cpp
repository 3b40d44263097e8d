#include "wfinite/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wfinite {

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 16) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

SampleMoments sample_moments(std::span<const double> values) {
  SampleMoments m;
  m.count = static_cast<std::int64_t>(values.size());
  if (values.empty()) return m;
  const double n = static_cast<double>(values.size());
  m.mean = pairwise_sum(values) / n;
  if (values.size() < 2) return m;

  std::vector<double> sq(values.size()), quart(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i] - m.mean;
    sq[i] = d * d;
    quart[i] = sq[i] * sq[i];
  }
  const double sum_sq = pairwise_sum(sq);
  m.variance = sum_sq / (n - 1.0);
  m.stddev = std::sqrt(m.variance);
  m.mean_std_error = m.stddev / std::sqrt(n);

  const double mu2 = sum_sq / n;
  const double mu4 = pairwise_sum(quart) / n;
  const double var_of_variance =
      std::max(0.0, (mu4 - mu2 * mu2 * (n - 3.0) / (n - 1.0)) / n);
  if (m.stddev > 0.0) m.stddev_std_error = std::sqrt(var_of_variance) / (2.0 * m.stddev);
  return m;
}

MCEstimate make_estimate(std::span<const double> values, SpikeSeed seed) {
  const SampleMoments m = sample_moments(values);
  return {m.mean, m.mean_std_error, m.count, seed};
}

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }

  constexpr std::size_t kChunk = 64;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&] {
        try {
          for (;;) {
            const std::size_t start = next.fetch_add(kChunk);
            if (start >= count) return;
            const std::size_t stop = std::min(count, start + kChunk);
            for (std::size_t i = start; i < stop; ++i) body(i);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wfinite
