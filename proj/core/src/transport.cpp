#include "wfinite/transport.hpp"

#include <algorithm>
#include <cmath>

#include "kahan.hpp"
#include "wfinite/error.hpp"

namespace wfinite {
namespace {

// Residuals closer than this are treated as exhausted together.
constexpr double kResidualTolerance = 1e-14;

// Walks the merged cumulative-mass breakpoints of a and b. On each interval
// (prev, next] both quantile functions are constant; visit receives the
// interval and the two atom indices.
template <typename Visit>
void walk_quantile_segments(const EmpiricalMeasure& a, const EmpiricalMeasure& b,
                            Visit&& visit) {
  const auto ca = a.cumulative();
  const auto cb = b.cumulative();
  std::size_t i = 0, j = 0;
  double prev = 0.0;
  while (i < ca.size() && j < cb.size()) {
    const double next = std::min(ca[i], cb[j]);
    if (!visit(prev, next, i, j)) return;
    prev = next;
    if (ca[i] == next) ++i;
    if (cb[j] == next) ++j;
  }
}

}  // namespace

double TransportPlan::cost(const EmpiricalMeasure& a,
                           const EmpiricalMeasure& b) const {
  detail::KahanSum sum;
  for (const auto& e : entries) {
    sum.add(e.mass * std::abs(a.atoms()[e.source] - b.atoms()[e.target]));
  }
  return sum.value();
}

std::vector<double> TransportPlan::row_sums(std::size_t rows) const {
  std::vector<double> out(rows, 0.0);
  for (const auto& e : entries) out.at(e.source) += e.mass;
  return out;
}

std::vector<double> TransportPlan::column_sums(std::size_t columns) const {
  std::vector<double> out(columns, 0.0);
  for (const auto& e : entries) out.at(e.target) += e.mass;
  return out;
}

double w1_equal_size(const SortedSamples& x, const SortedSamples& y) {
  if (x.size() != y.size()) raise(ErrorKind::kSizeMismatch, "trains differ in size");
  if (x.empty()) raise(ErrorKind::kInvalidMeasure, "W1 needs at least one sample");
  detail::KahanSum sum;
  for (std::size_t k = 0; k < x.size(); ++k) sum.add(std::abs(x[k] - y[k]));
  return sum.value() / static_cast<double>(x.size());
}

TransportPlan northwest_corner_plan(const EmpiricalMeasure& a,
                                    const EmpiricalMeasure& b) {
  TransportPlan plan;
  const auto ma = a.masses();
  const auto mb = b.masses();
  plan.entries.reserve(ma.size() + mb.size());

  std::size_t i = 0, j = 0;
  double ra = ma[0], rb = mb[0];
  while (i < ma.size() && j < mb.size()) {
    if (std::abs(ra - rb) <= kResidualTolerance) {
      plan.entries.push_back({i, j, std::min(ra, rb)});
      if (++i < ma.size()) ra = ma[i];
      if (++j < mb.size()) rb = mb[j];
    } else if (ra < rb) {
      plan.entries.push_back({i, j, ra});
      rb -= ra;
      if (++i < ma.size()) ra = ma[i];
    } else {
      plan.entries.push_back({i, j, rb});
      ra -= rb;
      if (++j < mb.size()) rb = mb[j];
    }
  }
  return plan;
}

double w1_general(const EmpiricalMeasure& a, const EmpiricalMeasure& b) {
  detail::KahanSum sum;
  walk_quantile_segments(a, b, [&](double lo, double hi, std::size_t i, std::size_t j) {
    sum.add((hi - lo) * std::abs(a.atoms()[i] - b.atoms()[j]));
    return true;
  });
  return sum.value();
}

double partial_transport_cost(const EmpiricalMeasure& a,
                              const EmpiricalMeasure& b, double u_lo,
                              double u_hi) {
  if (!(u_lo >= 0.0 && u_lo < u_hi && u_hi <= 1.0)) {
    raise(ErrorKind::kDomain, "quantile band must satisfy 0 <= lo < hi <= 1");
  }
  detail::KahanSum sum;
  walk_quantile_segments(a, b, [&](double lo, double hi, std::size_t i, std::size_t j) {
    if (lo >= u_hi) return false;
    const double width = std::min(hi, u_hi) - std::max(lo, u_lo);
    if (width > 0.0) sum.add(width * std::abs(a.atoms()[i] - b.atoms()[j]));
    return true;
  });
  return sum.value();
}

double w1_uniform_uniform(double rate1, double rate2) {
  if (!(rate1 > 0.0 && rate2 > 0.0)) raise(ErrorKind::kDomain, "rates must be positive");
  return 0.5 * std::abs(1.0 / rate1 - 1.0 / rate2);
}

}  // namespace wfinite
