#include "wfinite/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "kahan.hpp"
#include "wfinite/error.hpp"

namespace wfinite {
namespace {

void require_rates(double rate1, double rate2) {
  if (!(rate1 > 0.0 && rate2 > 0.0) || !std::isfinite(rate1) || !std::isfinite(rate2)) {
    raise(ErrorKind::kDomain, "rates must be positive and finite");
  }
}

void require_orders(int k, int l) {
  if (k < 1 || l < 1) raise(ErrorKind::kDomain, "arrival orders must be >= 1");
}

// E[(x_k + shift - y_l)^2] for Erlang x_k, y_l.
double second_moment(double rate1, double rate2, int k, int l, double shift) {
  const double drift = k / rate1 - l / rate2 + shift;
  return k / (rate1 * rate1) + l / (rate2 * rate2) + drift * drift;
}

// Poisson(a) probability of m events; a = 0 puts all mass on m = 0.
double poisson_pmf(int m, double a) {
  if (a == 0.0) return m == 0 ? 1.0 : 0.0;
  return std::exp(m * std::log(a) - a - std::lgamma(m + 1.0));
}

}  // namespace

double binom_abs_expectation(const BinomialAbsDeviation& b) {
  if (b.n < 1) raise(ErrorKind::kDomain, "binomial size must be >= 1");
  if (!(b.p > 0.0 && b.p < 1.0)) raise(ErrorKind::kDomain, "binomial p must lie in (0, 1)");
  if (b.center < 1 || b.center > b.n) raise(ErrorKind::kDomain, "center must lie in [1, n]");

  const double log_p = std::log(b.p);
  const double log_q = std::log1p(-b.p);
  const double log_n_fact = std::lgamma(b.n + 1.0);
  detail::KahanSum sum;
  for (int i = 0; i <= b.n; ++i) {
    const int deviation = std::abs(b.center - i);
    if (deviation == 0) continue;
    const double log_pmf = log_n_fact - std::lgamma(i + 1.0) - std::lgamma(b.n - i + 1.0) +
                           i * log_p + (b.n - i) * log_q;
    sum.add(std::exp(log_pmf) * deviation);
  }
  return sum.value();
}

ClosedFormMoment expected_distance(double rate1, double rate2, int k, int l) {
  require_rates(rate1, rate2);
  require_orders(k, l);
  // Canonical orientation makes the (rate1, k) <-> (rate2, l) symmetry exact.
  if (rate1 > rate2 || (rate1 == rate2 && k > l)) {
    std::swap(rate1, rate2);
    std::swap(k, l);
  }
  const double p = rate1 / (rate1 + rate2);
  const double prefactor = (rate1 + rate2) / (rate1 * rate2);
  ClosedFormMoment out;
  out.mean = prefactor * binom_abs_expectation({k + l, p, k});
  out.variance = std::max(0.0, second_moment(rate1, rate2, k, l, 0.0) - out.mean * out.mean);
  return out;
}

double expected_wasserstein(double rate1, double rate2, int n) {
  require_rates(rate1, rate2);
  if (n < 1) raise(ErrorKind::kDomain, "sample size must be >= 1");
  detail::KahanSum sum;
  for (int k = 1; k <= n; ++k) sum.add(expected_distance(rate1, rate2, k, k).mean);
  return sum.value() / n;
}

ClosedFormMoment shifted_expected_distance(double rate1, double rate2, int k,
                                           int l, double shift) {
  require_rates(rate1, rate2);
  require_orders(k, l);
  if (!std::isfinite(shift)) raise(ErrorKind::kDomain, "shift must be finite");
  if (shift == 0.0) return expected_distance(rate1, rate2, k, l);
  // |x_k - s - y_l| = |y_l + s - x_k|.
  if (shift < 0.0) return shifted_expected_distance(rate2, rate1, l, k, -shift);

  const double a = rate2 * shift;
  const double log_p = std::log(rate1 / (rate1 + rate2));
  const double log_q = std::log(rate2 / (rate1 + rate2));

  detail::KahanSum below;  // P(fewer than l events of Poisson(a))
  for (int m = 0; m < l; ++m) below.add(poisson_pmf(m, a));

  detail::KahanSum bracket;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < l; ++j) {
      const double weight = poisson_pmf(l - 1 - j, a);
      if (weight == 0.0) continue;
      const double log_term = std::lgamma(i + j + 1.0) - std::lgamma(i + 1.0) -
                              std::lgamma(j + 1.0) + i * log_p + (j + 1) * log_q;
      bracket.add(std::exp(log_term) * (k - i) / rate1 * weight);
    }
  }
  bracket.add(shift * poisson_pmf(l - 1, a));

  const double drift = k / rate1 - l / rate2 + shift;
  ClosedFormMoment out;
  out.mean = drift * (1.0 - 2.0 * below.value()) + 2.0 * bracket.value();
  out.variance =
      std::max(0.0, second_moment(rate1, rate2, k, l, shift) - out.mean * out.mean);
  return out;
}

ClosedFormMoment limiting_normalized_distance(double rate1, double rate2) {
  require_rates(rate1, rate2);
  if (rate1 == rate2) {
    raise(ErrorKind::kDegenerateLimit, "the normalized-distance limit needs distinct rates");
  }
  return {std::abs(1.0 / rate1 - 1.0 / rate2), 0.0};
}

double leading_order_wasserstein(double rate1, double rate2, int n) {
  require_rates(rate1, rate2);
  if (n < 1) raise(ErrorKind::kDomain, "sample size must be >= 1");
  return 0.5 * (n + 1.0) * std::abs(1.0 / rate1 - 1.0 / rate2);
}

}  // namespace wfinite
