#pragma once

#include <cstddef>
#include <vector>

#include "wfinite/measure.hpp"

namespace wfinite {

struct PlanEntry {
  std::size_t source = 0;
  std::size_t target = 0;
  double mass = 0.0;

  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

/// Monotone coupling between two measures, entries ordered by (source, target).
struct TransportPlan {
  std::vector<PlanEntry> entries;

  /// Sum of mass * |a_i - b_j| over entries.
  double cost(const EmpiricalMeasure& a, const EmpiricalMeasure& b) const;
  std::vector<double> row_sums(std::size_t rows) const;
  std::vector<double> column_sums(std::size_t columns) const;
};

/// (1/N) sum |x_k - y_k| for equal-size sorted trains. Throws kSizeMismatch
/// on different sizes and kInvalidMeasure on empty input.
double w1_equal_size(const SortedSamples& x, const SortedSamples& y);

/// Northwest-corner rule: walk both mass ladders in atom order, moving the
/// smaller residual mass at each step. Optimal for W1 on the line.
TransportPlan northwest_corner_plan(const EmpiricalMeasure& a,
                                    const EmpiricalMeasure& b);

/// Exact W1 as the integral of |quantile_a(u) - quantile_b(u)| over (0, 1],
/// evaluated on the merged cumulative-mass breakpoints.
double w1_general(const EmpiricalMeasure& a, const EmpiricalMeasure& b);

/// The same integral restricted to the band (u_lo, u_hi].
/// Requires 0 <= u_lo < u_hi <= 1 (kDomain otherwise).
double partial_transport_cost(const EmpiricalMeasure& a,
                              const EmpiricalMeasure& b, double u_lo,
                              double u_hi);

/// W1 between U[0, 1/rate1] and U[0, 1/rate2]: half the gap of the inverse rates.
double w1_uniform_uniform(double rate1, double rate2);

}  // namespace wfinite
