#pragma once

#include <cmath>

#include "wfinite/rate_function.hpp"

namespace wfinite {

struct ClosedFormMoment {
  double mean = 0.0;
  double variance = 0.0;

  double stddev() const { return std::sqrt(variance); }
};

/// |center - i| for i ~ Binomial(n, p).
struct BinomialAbsDeviation {
  int n = 1;
  double p = 0.5;
  int center = 1;
};

/// E|center - i| for i ~ Bin(n, p), summed exactly over all outcomes with
/// log-gamma binomial coefficients.
double binom_abs_expectation(const BinomialAbsDeviation& b);

/// Mean and variance of |x_k - y_l| where x_k, y_l are the k-th and l-th
/// arrivals of independent homogeneous processes with rates rate1, rate2.
/// Symmetric under (rate1, k) <-> (rate2, l), bit for bit.
ClosedFormMoment expected_distance(double rate1, double rate2, int k, int l);

/// E[W1] between the empirical measures of the first n arrivals of each
/// process: the average of expected_distance over k = 1..n.
double expected_wasserstein(double rate1, double rate2, int n);

/// Mean and variance of |x_k + shift - y_l|. Negative shifts swap the roles
/// of the two processes.
ClosedFormMoment shifted_expected_distance(double rate1, double rate2, int k,
                                           int l, double shift);

/// k -> inf limit of |x_k - y_k| / k: mean |1/rate1 - 1/rate2|, variance 0.
/// Throws kDegenerateLimit when the rates are equal.
ClosedFormMoment limiting_normalized_distance(double rate1, double rate2);

/// (n + 1)/2 * |1/rate1 - 1/rate2|.
double leading_order_wasserstein(double rate1, double rate2, int n);

enum class DistancePower { kAbsolute = 1, kSquared = 2 };

struct QuadratureOptions {
  double relative_tolerance = 1e-6;
  /// Gamma upper-tail mass dropped when truncating the u and v axes.
  double gamma_tail = 1e-10;
  unsigned max_depth = 18;
};

/// E|x_k - y_l|^power for nonhomogeneous processes with intensities mu, nu,
/// by 2D adaptive Gauss-Kronrod quadrature of the time-rescaled integral
///   int int |m^-1(u) - n^-1(v)|^power Gamma_k(u) Gamma_l(v) du dv.
/// Throws kIntensityExhausted when a rate's total intensity does not cover
/// the Gamma mass up to the tail tolerance.
double expected_distance_time_varying(const RateFunction& mu,
                                      const RateFunction& nu, int k, int l,
                                      DistancePower power,
                                      const QuadratureOptions& options = {});

}  // namespace wfinite
