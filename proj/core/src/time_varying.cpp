#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "kahan.hpp"
#include "wfinite/closed_form.hpp"
#include "wfinite/error.hpp"

namespace wfinite {
namespace {

using Rule = boost::math::quadrature::gauss_kronrod<double, 31>;

// Density of Gamma(k, 1) at u.
double gamma_density(int k, double u) {
  if (u <= 0.0) return k == 1 ? 1.0 : 0.0;
  return std::exp((k - 1) * std::log(u) - u - std::lgamma(static_cast<double>(k)));
}

// Upper truncation point of the Gamma(k, 1) axis; checks that the rate
// function still has intensity left there.
double truncation_point(const RateFunction& rate, int k, double tail) {
  const double upper = boost::math::gamma_q_inv(static_cast<double>(k), tail);
  if (!(upper < rate.total_intensity())) {
    raise(ErrorKind::kIntensityExhausted,
          "total intensity does not cover the Gamma mass of the requested order");
  }
  return upper;
}

// [0, upper] cut at every breakpoint of the rate's cumulative intensity.
std::vector<double> axis_cuts(const RateFunction& rate, double upper) {
  std::vector<double> cuts{0.0, upper};
  for (double c : rate.cumulative_at_breakpoints()) {
    if (c > 0.0 && c < upper) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

template <typename F>
double integrate_pieces(F&& f, const std::vector<double>& cuts, double tolerance,
                        unsigned depth) {
  detail::KahanSum sum;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    sum.add(Rule::integrate(f, cuts[i], cuts[i + 1], depth, tolerance));
  }
  return sum.value();
}

}  // namespace

double expected_distance_time_varying(const RateFunction& mu,
                                      const RateFunction& nu, int k, int l,
                                      DistancePower power,
                                      const QuadratureOptions& options) {
  if (k < 1 || l < 1) raise(ErrorKind::kDomain, "arrival orders must be >= 1");
  if (!(options.relative_tolerance > 0.0) || !(options.gamma_tail > 0.0)) {
    raise(ErrorKind::kDomain, "quadrature tolerances must be positive");
  }
  const double u_hi = truncation_point(mu, k, options.gamma_tail);
  const double v_hi = truncation_point(nu, l, options.gamma_tail);
  const std::vector<double> u_cuts = axis_cuts(mu, u_hi);
  const std::vector<double> v_cuts = axis_cuts(nu, v_hi);
  const bool squared = power == DistancePower::kSquared;
  const double inner_tol = options.relative_tolerance * 1e-2;

  // E over y_l of |x - y_l|^power, for a fixed x.
  auto inner = [&](double x) {
    std::vector<double> cuts = v_cuts;
    if (!squared) {
      // The absolute value kinks where n^-1(v) crosses x.
      const double crossing = nu.cumulative(x);
      if (crossing > 0.0 && crossing < v_hi) {
        cuts.insert(std::upper_bound(cuts.begin(), cuts.end(), crossing), crossing);
      }
    }
    auto f = [&](double v) {
      const double d = x - nu.inverse_cumulative(v);
      return (squared ? d * d : std::abs(d)) * gamma_density(l, v);
    };
    return integrate_pieces(f, cuts, inner_tol, options.max_depth);
  };

  auto outer = [&](double u) {
    return inner(mu.inverse_cumulative(u)) * gamma_density(k, u);
  };
  return integrate_pieces(outer, u_cuts, options.relative_tolerance, options.max_depth);
}

}  // namespace wfinite
