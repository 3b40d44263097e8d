#include "wfinite/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wfinite/closed_form.hpp"
#include "wfinite/error.hpp"
#include "wfinite/poisson.hpp"
#include "wfinite/transport.hpp"

namespace wfinite {
namespace {

void require_trials(std::int64_t trials) {
  if (trials < 100) raise(ErrorKind::kDomain, "Monte-Carlo validation needs at least 100 trials");
}

// Reports comparing both the mean and the standard deviation of `values`
// with a closed-form moment.
void append_moment_reports(std::vector<ValidationReport>& out,
                           const std::vector<std::pair<std::string, double>>& params,
                           const ClosedFormMoment& closed,
                           std::span<const double> values, SpikeSeed seed,
                           double threshold) {
  const SampleMoments m = sample_moments(values);
  out.push_back(make_report("mean", params, closed.mean,
                            {m.mean, m.mean_std_error, m.count, seed}, threshold));
  out.push_back(make_report("std", params, closed.stddev(),
                            {m.stddev, m.stddev_std_error, m.count, seed}, threshold));
}

}  // namespace

double ValidationReport::parameter(const std::string& name) const {
  for (const auto& [key, value] : parameters) {
    if (key == name) return value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

ValidationReport make_report(std::string quantity,
                             std::vector<std::pair<std::string, double>> parameters,
                             double closed_form, const MCEstimate& mc,
                             double threshold) {
  ValidationReport r;
  r.quantity = std::move(quantity);
  r.parameters = std::move(parameters);
  r.closed_form = closed_form;
  r.mc = mc;
  r.threshold = threshold;
  const double gap = mc.mean - closed_form;
  if (mc.std_error > 0.0) {
    r.z_score = gap / mc.std_error;
  } else {
    r.z_score = gap == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), gap);
  }
  r.pass = std::abs(r.z_score) <= threshold;
  return r;
}

std::vector<ValidationReport> validate_distance_pair(double rate1, double rate2, int k,
                                                     int l, std::int64_t trials,
                                                     SpikeSeed seed,
                                                     const RunOptions& options) {
  require_trials(trials);
  const ClosedFormMoment closed = expected_distance(rate1, rate2, k, l);
  std::vector<double> values(static_cast<std::size_t>(trials));
  parallel_for(values.size(), options.threads, [&](std::size_t t) {
    const SpikeSeed trial = seed.substream(t);
    Engine ex(trial.substream(0));
    Engine ey(trial.substream(1));
    values[t] = std::abs(sample_kth_arrival(rate1, k, ex) - sample_kth_arrival(rate2, l, ey));
  });
  std::vector<ValidationReport> out;
  append_moment_reports(out,
                        {{"rate1", rate1}, {"rate2", rate2}, {"k", k}, {"l", l}},
                        closed, values, seed, options.z_threshold);
  return out;
}

std::vector<ValidationReport> validate_expected_distance(double rate1, double rate2,
                                                         int k_max, std::int64_t trials,
                                                         SpikeSeed seed,
                                                         const RunOptions& options) {
  if (k_max < 1) raise(ErrorKind::kDomain, "k_max must be >= 1");
  require_trials(trials);
  std::vector<ValidationReport> out;
  out.reserve(2 * static_cast<std::size_t>(k_max));
  for (int k = 1; k <= k_max; ++k) {
    auto pair = validate_distance_pair(rate1, rate2, k, k, trials,
                                       seed.substream(static_cast<std::uint64_t>(k)), options);
    out.insert(out.end(), pair.begin(), pair.end());
  }
  return out;
}

std::vector<ValidationReport> validate_shift(double rate1, double rate2,
                                             std::span<const double> shifts,
                                             std::int64_t trials, SpikeSeed seed,
                                             const RunOptions& options) {
  require_trials(trials);
  // Same draws as order k = 1 of validate_expected_distance.
  const SpikeSeed first = seed.substream(1);
  const auto n = static_cast<std::size_t>(trials);
  std::vector<double> xs(n), ys(n);
  parallel_for(n, options.threads, [&](std::size_t t) {
    const SpikeSeed trial = first.substream(t);
    Engine ex(trial.substream(0));
    Engine ey(trial.substream(1));
    xs[t] = sample_kth_arrival(rate1, 1, ex);
    ys[t] = sample_kth_arrival(rate2, 1, ey);
  });

  std::vector<ValidationReport> out;
  std::vector<double> values(n);
  for (double shift : shifts) {
    const ClosedFormMoment closed = shifted_expected_distance(rate1, rate2, 1, 1, shift);
    for (std::size_t t = 0; t < n; ++t) values[t] = std::abs(xs[t] + shift - ys[t]);
    append_moment_reports(out, {{"rate1", rate1}, {"rate2", rate2}, {"shift", shift}},
                          closed, values, first, options.z_threshold);
  }
  return out;
}

HarmonicSlice harmonic_slice_argmin(double harmonic_mean, int n, double lo, double hi,
                                    int points) {
  if (points < 3 || points % 2 == 0) raise(ErrorKind::kDomain, "slice needs an odd number (>= 3) of points");
  if (!(lo > 0.0 && hi > lo)) raise(ErrorKind::kDomain, "rate range must satisfy 0 < lo < hi");
  // Rates on the slice, parametrized by p = r1 / (r1 + r2):
  // r1 = C / (2 (1 - p)), r2 = C / (2 p).
  const double c = harmonic_mean;
  const double p_lo = std::max(c / (2.0 * hi), 1.0 - c / (2.0 * lo));
  if (!(p_lo < 0.5)) raise(ErrorKind::kDomain, "harmonic slice does not cross the interior of the rate square");

  HarmonicSlice slice;
  slice.harmonic_mean = c;
  slice.points = points;
  slice.diagonal_index = points / 2;
  const int mid = points / 2;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < points; ++i) {
    const double p = i == mid ? 0.5 : 0.5 + (0.5 - p_lo) * (i - mid) / mid;
    const double r1 = c / (2.0 * (1.0 - p));
    const double r2 = c / (2.0 * p);
    const double value = expected_wasserstein(r1, r2, n);
    if (value < best) {
      best = value;
      slice.argmin_index = i;
    }
  }
  slice.argmin_on_diagonal = slice.argmin_index == slice.diagonal_index;
  return slice;
}

SurfaceValidation validate_wasserstein_surface(std::span<const double> rate_grid, int n,
                                               std::int64_t trials, SpikeSeed seed,
                                               const RunOptions& options) {
  require_trials(trials);
  if (n < 1) raise(ErrorKind::kDomain, "sample size must be >= 1");
  if (rate_grid.empty()) raise(ErrorKind::kDomain, "rate grid is empty");

  SurfaceValidation out;
  const std::size_t g = rate_grid.size();
  std::vector<double> values(static_cast<std::size_t>(trials));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      const double r1 = rate_grid[i], r2 = rate_grid[j];
      const SpikeSeed cell = seed.substream(i * g + j);
      parallel_for(values.size(), options.threads, [&](std::size_t t) {
        const SpikeSeed trial = cell.substream(t);
        Engine ex(trial.substream(0));
        Engine ey(trial.substream(1));
        values[t] = w1_equal_size(first_arrivals(r1, n, ex), first_arrivals(r2, n, ey));
      });
      out.cells.push_back(make_report("mean", {{"rate1", r1}, {"rate2", r2}, {"n", n}},
                                      expected_wasserstein(r1, r2, n),
                                      make_estimate(values, cell), options.z_threshold));
    }
  }

  const auto [lo_it, hi_it] = std::minmax_element(rate_grid.begin(), rate_grid.end());
  const double lo = *lo_it, hi = *hi_it;
  out.diagonal_minimum = true;
  for (double c : rate_grid) {
    if (!(c > lo && c < hi)) continue;
    out.slices.push_back(harmonic_slice_argmin(c, n, lo, hi));
    out.diagonal_minimum = out.diagonal_minimum && out.slices.back().argmin_on_diagonal;
  }
  return out;
}

}  // namespace wfinite
