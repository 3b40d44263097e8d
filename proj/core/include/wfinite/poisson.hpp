#pragma once

#include "wfinite/measure.hpp"
#include "wfinite/random.hpp"
#include "wfinite/rate_function.hpp"

namespace wfinite {

/// Event times of a Poisson process with intensity `rate` on [0, horizon].
/// Draws the count from Poisson(m(horizon)), places that many uniforms on
/// [0, m(horizon)) and maps them through m^-1. Returns an empty train when
/// m(horizon) = 0. Requires horizon > 0.
SortedSamples simulate_process(const RateFunction& rate, double horizon,
                               SpikeSeed seed);
SortedSamples simulate_process(const RateFunction& rate, double horizon,
                               Engine& engine);

/// Erlang(k, rate) draw: the k-th arrival of a homogeneous process, as a sum
/// of k unit exponentials over `rate`.
double sample_kth_arrival(double rate, int k, SpikeSeed seed);
double sample_kth_arrival(double rate, int k, Engine& engine);

/// First n arrival times of a homogeneous process (cumulative exponential gaps).
SortedSamples first_arrivals(double rate, int n, Engine& engine);

}  // namespace wfinite
