#include "wfinite/rate_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wfinite/error.hpp"

namespace wfinite {

RateFunction RateFunction::constant(double rate) {
  if (!(rate >= 0.0) || !std::isfinite(rate)) raise(ErrorKind::kDomain, "rate must be finite and nonnegative");
  RateFunction r;
  r.kind_ = Kind::kConstant;
  r.constant_ = rate;
  return r;
}

RateFunction RateFunction::piecewise_constant(std::vector<double> breakpoints,
                                              std::vector<double> levels) {
  RateFunction r;
  r.kind_ = Kind::kPiecewiseConstant;
  r.breaks_ = std::move(breakpoints);
  r.start_ = levels;
  r.end_ = std::move(levels);
  r.finish();
  return r;
}

RateFunction RateFunction::piecewise_linear(std::vector<double> breakpoints,
                                            std::vector<double> start_values,
                                            std::vector<double> end_values) {
  RateFunction r;
  r.kind_ = Kind::kPiecewiseLinear;
  r.breaks_ = std::move(breakpoints);
  r.start_ = std::move(start_values);
  r.end_ = std::move(end_values);
  r.finish();
  return r;
}

RateFunction RateFunction::piecewise_linear(std::vector<double> breakpoints,
                                            std::vector<double> values) {
  if (values.size() != breakpoints.size() || values.size() < 2) {
    raise(ErrorKind::kDomain, "need one rate value per breakpoint");
  }
  std::vector<double> start(values.begin(), values.end() - 1);
  std::vector<double> end(values.begin() + 1, values.end());
  return piecewise_linear(std::move(breakpoints), std::move(start), std::move(end));
}

void RateFunction::finish() {
  const std::size_t segments = breaks_.size() < 2 ? 0 : breaks_.size() - 1;
  if (segments == 0) raise(ErrorKind::kDomain, "piecewise rate needs at least two breakpoints");
  if (start_.size() != segments || end_.size() != segments) {
    raise(ErrorKind::kDomain, "need one rate specification per segment");
  }
  if (!(breaks_.front() >= 0.0)) raise(ErrorKind::kDomain, "breakpoints must be nonnegative");
  for (std::size_t i = 0; i < breaks_.size(); ++i) {
    if (!std::isfinite(breaks_[i])) raise(ErrorKind::kDomain, "breakpoints must be finite");
    if (i > 0 && !(breaks_[i] > breaks_[i - 1])) {
      raise(ErrorKind::kDomain, "breakpoints must be strictly increasing");
    }
  }
  for (std::size_t s = 0; s < segments; ++s) {
    if (!(start_[s] >= 0.0 && end_[s] >= 0.0) || !std::isfinite(start_[s]) ||
        !std::isfinite(end_[s])) {
      raise(ErrorKind::kDomain, "rate values must be finite and nonnegative");
    }
  }
  cum_.assign(breaks_.size(), 0.0);
  for (std::size_t s = 0; s < segments; ++s) {
    const double width = breaks_[s + 1] - breaks_[s];
    cum_[s + 1] = cum_[s] + 0.5 * (start_[s] + end_[s]) * width;
  }
}

double RateFunction::rate(double t) const {
  if (kind_ == Kind::kConstant) return t >= 0.0 ? constant_ : 0.0;
  if (t < breaks_.front() || t > breaks_.back()) return 0.0;
  const std::size_t segments = breaks_.size() - 1;
  auto s = static_cast<std::size_t>(
      std::upper_bound(breaks_.begin(), breaks_.end(), t) - breaks_.begin());
  s = std::min(s == 0 ? 0 : s - 1, segments - 1);
  const double width = breaks_[s + 1] - breaks_[s];
  const double frac = (t - breaks_[s]) / width;
  return start_[s] + (end_[s] - start_[s]) * frac;
}

double RateFunction::cumulative(double x) const {
  if (!(x >= 0.0)) raise(ErrorKind::kDomain, "cumulative intensity needs x >= 0");
  if (kind_ == Kind::kConstant) return constant_ * x;
  if (x <= breaks_.front()) return 0.0;
  if (x >= breaks_.back()) return cum_.back();
  const auto s = static_cast<std::size_t>(
                     std::upper_bound(breaks_.begin(), breaks_.end(), x) - breaks_.begin()) - 1;
  const double width = breaks_[s + 1] - breaks_[s];
  const double slope = (end_[s] - start_[s]) / width;
  const double tau = x - breaks_[s];
  return cum_[s] + tau * (start_[s] + 0.5 * slope * tau);
}

double RateFunction::total_intensity() const noexcept {
  if (kind_ == Kind::kConstant) {
    return constant_ > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return cum_.back();
}

double RateFunction::inverse_cumulative(double u) const {
  if (!(u >= 0.0)) raise(ErrorKind::kDomain, "inverse cumulative intensity needs u >= 0");
  if (!(u < total_intensity())) {
    raise(ErrorKind::kIntensityExhausted, "u is beyond the total intensity");
  }
  if (kind_ == Kind::kConstant) return u / constant_;
  if (u == 0.0) return 0.0;

  // First segment whose end cumulative reaches u; its start is then < u.
  const auto it = std::lower_bound(cum_.begin() + 1, cum_.end(), u);
  const auto s = static_cast<std::size_t>(it - cum_.begin()) - 1;
  const double width = breaks_[s + 1] - breaks_[s];
  const double slope = (end_[s] - start_[s]) / width;
  const double delta = u - cum_[s];
  // Root of start*tau + slope*tau^2/2 = delta in the cancellation-free form
  // tau = 2 delta / (start + sqrt(start^2 + 2 slope delta)).
  const double disc = std::max(0.0, start_[s] * start_[s] + 2.0 * slope * delta);
  const double tau = 2.0 * delta / (start_[s] + std::sqrt(disc));
  return breaks_[s] + std::min(tau, width);
}

double cumulative_intensity(const RateFunction& r, double x) { return r.cumulative(x); }

double inverse_cumulative_intensity(const RateFunction& r, double u) {
  return r.inverse_cumulative(u);
}

}  // namespace wfinite
