#pragma once

#include <cstddef>
#include <vector>

#include "wfinite/measure.hpp"

namespace wfinite {

/// max over x of the distance to the nearest y. Linear-time sorted merge.
/// Throws kEmptyTrain if either train is empty.
double directed_hausdorff(const SortedSamples& x, const SortedSamples& y);

/// max(directed_hausdorff(x, y), directed_hausdorff(y, x)).
double hausdorff(const SortedSamples& x, const SortedSamples& y);

/// Histogram probability masses over fixed edges. An empty train yields
/// all-zero masses with `empty` set.
struct BinnedPMF {
  std::vector<double> edges;
  std::vector<double> masses;
  bool empty = false;
};

/// Equal-width bins over [lo, hi]; samples equal to hi land in the last bin.
/// Samples outside [lo, hi] are dropped from the counts.
BinnedPMF bin_samples(const SortedSamples& x, double lo, double hi, int bins);

struct JsDivergence {
  double total = 0.0;
  std::vector<double> per_bin;
  /// Equal-width edges over the union range of both trains.
  std::vector<double> edges;
};

/// Jensen-Shannon divergence (natural log) between the binned masses of x
/// and y. Per-bin term 1/2 (P log(P/M) + Q log(Q/M)) with 0 log 0 = 0;
/// total lies in [0, ln 2]. A zero-width union range puts all mass in the
/// first bin (total 0).
JsDivergence binned_js_divergence(const SortedSamples& x,
                                  const SortedSamples& y, int bins);

/// Victor-Purpura edit distance: unit cost to insert or delete a spike,
/// q * |dt| to move one. Empty trains are legal.
double victor_purpura(const SortedSamples& x, const SortedSamples& y,
                      double q);

/// Feature-space distance of the Laplacian spike-train kernel
/// k(X, Y) = sum_ij exp(-|x_i - y_j| / bandwidth).
double kfs_distance(const SortedSamples& x, const SortedSamples& y,
                    double bandwidth);

/// Fixed number of channels, each its own sorted train.
class MultiChannelTrain {
 public:
  explicit MultiChannelTrain(std::vector<SortedSamples> channels);

  std::size_t channel_count() const noexcept { return channels_.size(); }
  const SortedSamples& channel(std::size_t c) const { return channels_.at(c); }
  const std::vector<SortedSamples>& channels() const noexcept {
    return channels_;
  }

 private:
  std::vector<SortedSamples> channels_;
};

/// Euclidean norm of per-channel spike-count differences.
double spike_count_distance(const MultiChannelTrain& a,
                            const MultiChannelTrain& b);

/// sqrt(sum_c W1(a_c, b_c)^2) over channels of uniform empirical measures.
double composite_wasserstein(const MultiChannelTrain& a,
                             const MultiChannelTrain& b);

}  // namespace wfinite
