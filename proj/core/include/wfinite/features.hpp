#pragma once

#include <span>
#include <vector>

#include "wfinite/measure.hpp"

namespace wfinite {

enum class FeatureKind { kTransportCost, kJsBins, kHausdorffPair };

struct FeatureVector {
  FeatureKind kind = FeatureKind::kTransportCost;
  std::vector<double> values;
  /// Quantile-band edges (transport cost) or bin edges (JS). Empty for the
  /// Hausdorff pair.
  std::vector<double> edges;
};

enum class PostTransform { kNone, kLog1p };

/// values[i] = transport cost of the quantile band (i/D, (i+1)/D].
/// Entries are nonnegative and sum to w1_general(a, ref).
FeatureVector transport_cost_features(const EmpiricalMeasure& a,
                                      const EmpiricalMeasure& ref, int bands,
                                      PostTransform post = PostTransform::kNone);

/// One transport_cost_features vector per reference, in order.
std::vector<FeatureVector> classwise_transport_cost_features(
    const EmpiricalMeasure& a, std::span<const EmpiricalMeasure> refs,
    int bands, PostTransform post = PostTransform::kNone);

FeatureVector js_bin_features(const SortedSamples& x, const SortedSamples& y,
                              int bins);

/// (x -> y, y -> x) directed Hausdorff distances.
FeatureVector hausdorff_features(const SortedSamples& x,
                                 const SortedSamples& y);

/// Column-wise z-scoring over a batch of equal-length vectors. Columns with
/// zero spread are centred only.
void standardize_columns(std::span<FeatureVector> batch);

}  // namespace wfinite
