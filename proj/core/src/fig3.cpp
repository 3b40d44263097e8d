#include <cmath>
#include <limits>
#include <vector>

#include "wfinite/dissimilarity.hpp"
#include "wfinite/error.hpp"
#include "wfinite/poisson.hpp"
#include "wfinite/transport.hpp"
#include "wfinite/validation.hpp"

namespace wfinite {
namespace {

MCEstimate estimate_finite(const std::vector<double>& values, SpikeSeed seed) {
  std::vector<double> kept;
  kept.reserve(values.size());
  for (double v : values) {
    if (!std::isnan(v)) kept.push_back(v);
  }
  if (kept.empty()) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, 0, seed};
  }
  return make_estimate(kept, seed);
}

}  // namespace

Fig3Config default_fig3_config() {
  Fig3Config config;
  for (int i = -8; i <= 8; ++i) config.shifts.push_back(0.25 * i);
  for (int i = -4; i <= 4; ++i) config.ratios.push_back(std::exp(0.5 * i));
  return config;
}

RateFunction fig3_reference_rate(double base_rate) {
  return RateFunction::piecewise_constant({0.0, 1.0}, {base_rate});
}

RateFunction fig3_ratio_rate(double base_rate, double ratio) {
  if (!(ratio > 0.0)) raise(ErrorKind::kDomain, "rate ratio must be positive");
  const double split = 1.0 / (ratio + 1.0);
  return RateFunction::piecewise_constant({0.0, split, 1.0},
                                          {ratio * base_rate, base_rate / ratio});
}

std::vector<Fig3Row> run_fig3_experiment(const Fig3Config& config, std::int64_t trials,
                                         SpikeSeed seed, const RunOptions& options) {
  if (trials < 1) raise(ErrorKind::kDomain, "need at least one trial");
  if (!(config.base_rate > 0.0)) raise(ErrorKind::kDomain, "base rate must be positive");
  if (config.order < 1) raise(ErrorKind::kDomain, "order statistic index must be >= 1");
  const RateFunction reference = fig3_reference_rate(config.base_rate);
  const auto n = static_cast<std::size_t>(trials);
  const auto order = static_cast<std::size_t>(config.order);
  constexpr double kSkip = std::numeric_limits<double>::quiet_NaN();

  std::vector<Fig3Row> rows;
  for (double shift : config.shifts) {
    for (double ratio : config.ratios) {
      const RateFunction other = fig3_ratio_rate(config.base_rate, ratio);
      std::vector<double> w1(n), haus(n), h_ref(n), h_other(n), js(n), gap(n);
      parallel_for(n, options.threads, [&](std::size_t t) {
        const SpikeSeed trial = seed.substream(t);
        Engine ex(trial.substream(0));
        Engine ey(trial.substream(1));
        const SortedSamples x = simulate_process(reference, 1.0, ex);
        const SortedSamples y = simulate_process(other, 1.0, ey).shifted(shift);
        if (x.empty() || y.empty()) {
          w1[t] = haus[t] = h_ref[t] = h_other[t] = js[t] = gap[t] = kSkip;
          return;
        }
        w1[t] = w1_general(EmpiricalMeasure::uniform(x), EmpiricalMeasure::uniform(y));
        h_ref[t] = directed_hausdorff(x, y);
        h_other[t] = directed_hausdorff(y, x);
        haus[t] = std::max(h_ref[t], h_other[t]);
        js[t] = binned_js_divergence(x, y, config.bins).total;
        gap[t] = (x.size() >= order && y.size() >= order)
                     ? std::abs(x[order - 1] - y[order - 1])
                     : kSkip;
      });

      Fig3Row row;
      row.shift = shift;
      row.ratio = ratio;
      row.w1 = estimate_finite(w1, seed);
      row.hausdorff = estimate_finite(haus, seed);
      row.directed_hausdorff_ref = estimate_finite(h_ref, seed);
      row.directed_hausdorff_other = estimate_finite(h_other, seed);
      row.js = estimate_finite(js, seed);
      row.order_gap = estimate_finite(gap, seed);
      row.skipped_empty = trials - row.w1.trials;
      row.skipped_order = row.w1.trials - row.order_gap.trials;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace wfinite
