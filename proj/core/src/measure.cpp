#include "wfinite/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wfinite/error.hpp"

namespace wfinite {
namespace {

void require_finite(std::span<const double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) raise(ErrorKind::kInvalidSample, "sample is NaN or infinite");
  }
}

}  // namespace

SortedSamples SortedSamples::from_unsorted(std::vector<double> values) {
  require_finite(values);
  std::sort(values.begin(), values.end());
  return SortedSamples(std::move(values));
}

SortedSamples SortedSamples::from_sorted(std::vector<double> values) {
  require_finite(values);
  if (!std::is_sorted(values.begin(), values.end())) {
    raise(ErrorKind::kInvalidSample, "samples are not in nondecreasing order");
  }
  return SortedSamples(std::move(values));
}

SortedSamples SortedSamples::shifted(double offset) const {
  std::vector<double> out(values_);
  for (double& v : out) v += offset;
  return from_sorted(std::move(out));
}

EmpiricalMeasure EmpiricalMeasure::uniform(const SortedSamples& samples) {
  if (samples.empty()) raise(ErrorKind::kInvalidMeasure, "empirical measure needs at least one sample");
  const std::size_t n = samples.size();
  const double dn = static_cast<double>(n);
  EmpiricalMeasure m;
  m.atoms_.assign(samples.begin(), samples.end());
  m.masses_.assign(n, 1.0 / dn);
  m.cumulative_.resize(n);
  // (i + 1) / n is correctly rounded; a running sum of 1/n drifts.
  for (std::size_t i = 0; i < n; ++i) m.cumulative_[i] = static_cast<double>(i + 1) / dn;
  return m;
}

EmpiricalMeasure EmpiricalMeasure::weighted(std::vector<double> atoms,
                                            std::vector<double> masses) {
  if (atoms.empty()) raise(ErrorKind::kInvalidMeasure, "empirical measure needs at least one atom");
  if (atoms.size() != masses.size()) raise(ErrorKind::kInvalidMeasure, "atoms and masses differ in length");
  require_finite(atoms);
  for (double w : masses) {
    if (!(w > 0.0) || !std::isfinite(w)) raise(ErrorKind::kInvalidMeasure, "masses must be positive and finite");
  }

  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return atoms[i] < atoms[j]; });

  EmpiricalMeasure m;
  m.atoms_.reserve(atoms.size());
  m.masses_.reserve(atoms.size());
  for (std::size_t i : order) {
    m.atoms_.push_back(atoms[i]);
    m.masses_.push_back(masses[i]);
  }

  double total = 0.0, carry = 0.0;  // Kahan
  for (double w : m.masses_) {
    const double y = w - carry;
    const double t = total + y;
    carry = (t - total) - y;
    total = t;
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    raise(ErrorKind::kInvalidMeasure, "masses do not sum to one");
  }
  for (double& w : m.masses_) w /= total;

  m.cumulative_.resize(m.masses_.size());
  double running = 0.0;
  carry = 0.0;
  for (std::size_t i = 0; i < m.masses_.size(); ++i) {
    const double y = m.masses_[i] - carry;
    const double t = running + y;
    carry = (t - running) - y;
    running = t;
    m.cumulative_[i] = std::min(running, 1.0);
  }
  m.cumulative_.back() = 1.0;
  return m;
}

EmpiricalMeasure EmpiricalMeasure::shifted(double offset) const {
  EmpiricalMeasure m(*this);
  for (double& a : m.atoms_) a += offset;
  return m;
}

EmpiricalMeasure make_uniform_empirical(std::span<const double> values) {
  if (values.empty()) raise(ErrorKind::kInvalidMeasure, "empirical measure needs at least one sample");
  return EmpiricalMeasure::uniform(
      SortedSamples::from_unsorted(std::vector<double>(values.begin(), values.end())));
}

double quantile(const EmpiricalMeasure& m, double u) {
  if (!(u > 0.0 && u <= 1.0)) raise(ErrorKind::kDomain, "quantile level must lie in (0, 1]");
  const auto cum = m.cumulative();
  const auto it = std::lower_bound(cum.begin(), cum.end(), u);
  const auto i = static_cast<std::size_t>(it - cum.begin());
  return m.atoms()[std::min(i, m.size() - 1)];
}

double cdf(const EmpiricalMeasure& m, double t) {
  if (std::isnan(t)) raise(ErrorKind::kDomain, "cdf evaluated at NaN");
  const auto atoms = m.atoms();
  const auto it = std::upper_bound(atoms.begin(), atoms.end(), t);
  if (it == atoms.begin()) return 0.0;
  return m.cumulative()[static_cast<std::size_t>(it - atoms.begin()) - 1];
}

EmpiricalMeasure pool_uniform(std::span<const SortedSamples> trains) {
  std::vector<double> pooled;
  for (const auto& t : trains) pooled.insert(pooled.end(), t.begin(), t.end());
  return make_uniform_empirical(pooled);
}

}  // namespace wfinite
