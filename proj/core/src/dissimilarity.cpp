#include "wfinite/dissimilarity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kahan.hpp"
#include "wfinite/error.hpp"
#include "wfinite/transport.hpp"

namespace wfinite {
namespace {

void require_nonempty(const SortedSamples& x, const SortedSamples& y) {
  if (x.empty() || y.empty()) raise(ErrorKind::kEmptyTrain, "spike train is empty");
}

// sum_ij (1 - exp(-|a_i - b_j| / bandwidth)); expm1 keeps precision when
// the bandwidth dwarfs the spike spacing.
double kernel_deficit(const SortedSamples& a, const SortedSamples& b, double bandwidth) {
  detail::KahanSum sum;
  for (double ai : a) {
    for (double bj : b) sum.add(-std::expm1(-std::abs(ai - bj) / bandwidth));
  }
  return sum.value();
}

}  // namespace

double directed_hausdorff(const SortedSamples& x, const SortedSamples& y) {
  require_nonempty(x, y);
  double worst = 0.0;
  std::size_t j = 0;
  for (double xi : x) {
    while (j < y.size() && y[j] < xi) ++j;
    double nearest = std::numeric_limits<double>::infinity();
    if (j < y.size()) nearest = y[j] - xi;
    if (j > 0) nearest = std::min(nearest, xi - y[j - 1]);
    worst = std::max(worst, nearest);
  }
  return worst;
}

double hausdorff(const SortedSamples& x, const SortedSamples& y) {
  return std::max(directed_hausdorff(x, y), directed_hausdorff(y, x));
}

BinnedPMF bin_samples(const SortedSamples& x, double lo, double hi, int bins) {
  if (bins < 1) raise(ErrorKind::kDomain, "need at least one bin");
  if (!(hi >= lo)) raise(ErrorKind::kDomain, "bin range is inverted");
  const auto b = static_cast<std::size_t>(bins);
  BinnedPMF pmf;
  pmf.edges.resize(b + 1);
  const double width = (hi - lo) / bins;
  for (std::size_t i = 0; i <= b; ++i) pmf.edges[i] = lo + width * static_cast<double>(i);
  pmf.edges.back() = hi;
  pmf.masses.assign(b, 0.0);
  pmf.empty = x.empty();
  if (x.empty()) return pmf;

  std::vector<std::size_t> counts(b, 0);
  std::size_t inside = 0;
  for (double v : x) {
    if (v < lo || v > hi) continue;
    std::size_t idx = 0;
    if (width > 0.0) {
      idx = static_cast<std::size_t>(std::floor((v - lo) / width));
      idx = std::min(idx, b - 1);
    }
    ++counts[idx];
    ++inside;
  }
  for (std::size_t i = 0; i < b; ++i) {
    pmf.masses[i] = static_cast<double>(counts[i]) / static_cast<double>(x.size());
  }
  pmf.empty = inside == 0;
  return pmf;
}

JsDivergence binned_js_divergence(const SortedSamples& x, const SortedSamples& y,
                                  int bins) {
  require_nonempty(x, y);
  if (bins < 1) raise(ErrorKind::kDomain, "need at least one bin");
  const double lo = std::min(x.front(), y.front());
  const double hi = std::max(x.back(), y.back());
  const BinnedPMF p = bin_samples(x, lo, hi, bins);
  const BinnedPMF q = bin_samples(y, lo, hi, bins);

  JsDivergence out;
  out.edges = p.edges;
  out.per_bin.assign(p.masses.size(), 0.0);
  detail::KahanSum total;
  for (std::size_t k = 0; k < p.masses.size(); ++k) {
    const double pk = p.masses[k], qk = q.masses[k];
    const double mk = 0.5 * (pk + qk);
    double v = 0.0;
    if (pk > 0.0) v += 0.5 * pk * std::log(pk / mk);
    if (qk > 0.0) v += 0.5 * qk * std::log(qk / mk);
    out.per_bin[k] = std::max(v, 0.0);  // nonnegative up to rounding
    total.add(out.per_bin[k]);
  }
  out.total = total.value();
  return out;
}

double victor_purpura(const SortedSamples& x, const SortedSamples& y, double q) {
  if (!(q >= 0.0) || !std::isfinite(q)) raise(ErrorKind::kDomain, "shift cost q must be >= 0");
  const std::size_t n = x.size(), m = y.size();
  std::vector<double> prev(m + 1), curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<double>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = static_cast<double>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      curr[j] = std::min({prev[j] + 1.0, curr[j - 1] + 1.0,
                          prev[j - 1] + q * std::abs(x[i - 1] - y[j - 1])});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

double kfs_distance(const SortedSamples& x, const SortedSamples& y, double bandwidth) {
  require_nonempty(x, y);
  if (!(bandwidth > 0.0)) raise(ErrorKind::kDomain, "kernel bandwidth must be positive");
  const double count_gap = static_cast<double>(x.size()) - static_cast<double>(y.size());
  // k(x,x) - 2k(x,y) + k(y,y) rewritten with deficits 1 - exp(-d/tau).
  const double radicand = count_gap * count_gap - kernel_deficit(x, x, bandwidth) +
                          2.0 * kernel_deficit(x, y, bandwidth) -
                          kernel_deficit(y, y, bandwidth);
  if (radicand < -1e-9) {
    raise(ErrorKind::kNumerical, "kernel feature-space radicand is negative");
  }
  return std::sqrt(std::max(radicand, 0.0));
}

MultiChannelTrain::MultiChannelTrain(std::vector<SortedSamples> channels)
    : channels_(std::move(channels)) {
  if (channels_.empty()) raise(ErrorKind::kDomain, "a multichannel train needs at least one channel");
}

double spike_count_distance(const MultiChannelTrain& a, const MultiChannelTrain& b) {
  if (a.channel_count() != b.channel_count()) {
    raise(ErrorKind::kChannelMismatch, "trains have different channel counts");
  }
  double sum = 0.0;
  for (std::size_t c = 0; c < a.channel_count(); ++c) {
    const double d = static_cast<double>(a.channel(c).size()) -
                     static_cast<double>(b.channel(c).size());
    sum += d * d;
  }
  return std::sqrt(sum);
}

double composite_wasserstein(const MultiChannelTrain& a, const MultiChannelTrain& b) {
  if (a.channel_count() != b.channel_count()) {
    raise(ErrorKind::kChannelMismatch, "trains have different channel counts");
  }
  detail::KahanSum sum;
  for (std::size_t c = 0; c < a.channel_count(); ++c) {
    require_nonempty(a.channel(c), b.channel(c));
    const double w = w1_general(EmpiricalMeasure::uniform(a.channel(c)),
                                EmpiricalMeasure::uniform(b.channel(c)));
    sum.add(w * w);
  }
  return std::sqrt(sum.value());
}

}  // namespace wfinite
