#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "wfinite/random.hpp"

namespace wfinite {

/// Monte-Carlo estimate of a mean. std_error = sample_std / sqrt(trials).
struct MCEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t trials = 0;
  SpikeSeed seed;
};

/// Sample moments of a batch, reduced in a fixed order so results do not
/// depend on how the batch was produced.
struct SampleMoments {
  std::int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  double stddev = 0.0;
  double mean_std_error = 0.0;
  /// Delta-method standard error of `stddev`, from the fourth central moment.
  double stddev_std_error = 0.0;
};

SampleMoments sample_moments(std::span<const double> values);

/// Pairwise (cascade) sum; deterministic for a given input order.
double pairwise_sum(std::span<const double> values);

MCEstimate make_estimate(std::span<const double> values, SpikeSeed seed);

/// Runs body(i) for i in [0, count) across up to `threads` workers (0 picks
/// the hardware concurrency). Each index is visited exactly once; callers
/// write results into per-index slots so the reduction stays deterministic.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace wfinite
