#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wfinite/random.hpp"
#include "wfinite/rate_function.hpp"
#include "wfinite/statistics.hpp"

namespace wfinite {

/// Default |z| bar. Hundreds of simultaneous comparisons are made, so the
/// bar is wider than a single-test 2-sigma.
inline constexpr double kDefaultZThreshold = 4.0;

struct ValidationReport {
  std::string quantity;
  std::vector<std::pair<std::string, double>> parameters;
  double closed_form = 0.0;
  MCEstimate mc;
  double z_score = 0.0;
  double threshold = kDefaultZThreshold;
  bool pass = false;

  double parameter(const std::string& name) const;
};

/// z = (mc.mean - closed_form) / mc.std_error; pass iff |z| <= threshold.
ValidationReport make_report(std::string quantity,
                             std::vector<std::pair<std::string, double>> parameters,
                             double closed_form, const MCEstimate& mc,
                             double threshold);

struct RunOptions {
  unsigned threads = 0;
  double z_threshold = kDefaultZThreshold;
};

/// Monte-Carlo of |x_k - y_l| (Erlang draws, one substream per trial and
/// process) against expected_distance. Returns the "mean" and "std" reports.
std::vector<ValidationReport> validate_distance_pair(
    double rate1, double rate2, int k, int l, std::int64_t trials,
    SpikeSeed seed, const RunOptions& options = {});

/// validate_distance_pair(rate1, rate2, k, k) for k = 1..k_max, in order
/// (mean, std) per k. Order k draws from seed.substream(k).
std::vector<ValidationReport> validate_expected_distance(
    double rate1, double rate2, int k_max, std::int64_t trials,
    SpikeSeed seed, const RunOptions& options = {});

/// Monte-Carlo of |x_1 + shift - y_1| against shifted_expected_distance for
/// each shift. Every grid point reuses the k = 1 draws of
/// validate_expected_distance, so the shift = 0 column matches it exactly.
std::vector<ValidationReport> validate_shift(double rate1, double rate2,
                                             std::span<const double> shifts,
                                             std::int64_t trials,
                                             SpikeSeed seed,
                                             const RunOptions& options = {});

struct HarmonicSlice {
  double harmonic_mean = 0.0;
  int points = 0;
  int argmin_index = -1;
  int diagonal_index = -1;
  bool argmin_on_diagonal = false;
};

/// Sweeps `points` rate pairs with 2 r1 r2 / (r1 + r2) = harmonic_mean that
/// stay inside [lo, hi]^2, symmetric about the diagonal (which is the middle
/// point), and locates the argmin of expected_wasserstein(r1, r2, n).
HarmonicSlice harmonic_slice_argmin(double harmonic_mean, int n, double lo,
                                    double hi, int points = 101);

struct SurfaceValidation {
  std::vector<ValidationReport> cells;
  std::vector<HarmonicSlice> slices;
  bool diagonal_minimum = false;
};

/// MC E[W1] of n-spike trains vs expected_wasserstein on the grid
/// rate_grid x rate_grid, plus a harmonic-mean slice through every interior
/// grid value.
SurfaceValidation validate_wasserstein_surface(std::span<const double> rate_grid,
                                               int n, std::int64_t trials,
                                               SpikeSeed seed,
                                               const RunOptions& options = {});

/// Synthetic comparison of W1, Hausdorff, JS and an order-statistic gap.
/// The reference train has rate base_rate on [0, 1]; the other has
/// ratio * base_rate on [0, 1/(ratio + 1)) and base_rate / ratio on
/// [1/(ratio + 1), 1], translated by the shift.
struct Fig3Config {
  double base_rate = 100.0;
  std::vector<double> shifts;
  std::vector<double> ratios;
  int bins = 10;
  int order = 50;
};

Fig3Config default_fig3_config();

RateFunction fig3_reference_rate(double base_rate);
RateFunction fig3_ratio_rate(double base_rate, double ratio);

struct Fig3Row {
  double shift = 0.0;
  double ratio = 1.0;
  MCEstimate w1;
  MCEstimate hausdorff;  // symmetrized
  MCEstimate directed_hausdorff_ref;    // reference -> shifted train
  MCEstimate directed_hausdorff_other;  // shifted train -> reference
  MCEstimate js;
  MCEstimate order_gap;  // |x_order - y_order| over trials with enough spikes
  std::int64_t skipped_order = 0;
  std::int64_t skipped_empty = 0;
};

/// Trial t draws both trains from seed.substream(t), shared across all
/// (shift, ratio) rows.
std::vector<Fig3Row> run_fig3_experiment(const Fig3Config& config,
                                         std::int64_t trials, SpikeSeed seed,
                                         const RunOptions& options = {});

}  // namespace wfinite
