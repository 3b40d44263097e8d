#pragma once

#include <span>
#include <vector>

namespace wfinite {

/// Nonnegative intensity on [0, inf). A constant rate is supported on the
/// whole half-line; piecewise rates are zero outside [t_0, t_M] with
/// 0 <= t_0 < ... < t_M. Piecewise-linear segments may be discontinuous at
/// breakpoints.
class RateFunction {
 public:
  enum class Kind { kConstant, kPiecewiseConstant, kPiecewiseLinear };

  static RateFunction constant(double rate);
  /// levels.size() == breakpoints.size() - 1.
  static RateFunction piecewise_constant(std::vector<double> breakpoints,
                                         std::vector<double> levels);
  /// Segment s runs linearly from start_values[s] at breakpoints[s] to
  /// end_values[s] at breakpoints[s + 1].
  static RateFunction piecewise_linear(std::vector<double> breakpoints,
                                       std::vector<double> start_values,
                                       std::vector<double> end_values);
  /// Continuous piecewise-linear rate through (breakpoints[i], values[i]).
  static RateFunction piecewise_linear(std::vector<double> breakpoints,
                                       std::vector<double> values);

  Kind kind() const noexcept { return kind_; }
  std::span<const double> breakpoints() const noexcept { return breaks_; }

  double rate(double t) const;
  /// m(x) = integral of the rate over [0, x]. x < 0 throws kDomain.
  double cumulative(double x) const;
  /// m(inf); +inf for a positive constant rate.
  double total_intensity() const noexcept;
  /// Smallest x with m(x) = u. Throws kDomain for u < 0 and
  /// kIntensityExhausted for u >= m(inf).
  double inverse_cumulative(double u) const;
  /// Values of m at the breakpoints, where m^-1 may have kinks or jumps.
  std::span<const double> cumulative_at_breakpoints() const noexcept {
    return cum_;
  }

 private:
  RateFunction() = default;
  void finish();

  Kind kind_ = Kind::kConstant;
  double constant_ = 0.0;
  std::vector<double> breaks_;
  std::vector<double> start_;  // rate at the left end of each segment
  std::vector<double> end_;    // rate at the right end of each segment
  std::vector<double> cum_;    // m(breaks_[i])
};

double cumulative_intensity(const RateFunction& r, double x);
double inverse_cumulative_intensity(const RateFunction& r, double u);

}  // namespace wfinite
