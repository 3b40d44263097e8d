#include "wfinite/features.hpp"

#include <cmath>

#include "wfinite/dissimilarity.hpp"
#include "wfinite/error.hpp"
#include "wfinite/transport.hpp"

namespace wfinite {

FeatureVector transport_cost_features(const EmpiricalMeasure& a,
                                      const EmpiricalMeasure& ref, int bands,
                                      PostTransform post) {
  if (bands < 1) raise(ErrorKind::kDomain, "need at least one quantile band");
  FeatureVector out;
  out.kind = FeatureKind::kTransportCost;
  out.edges.resize(static_cast<std::size_t>(bands) + 1);
  for (int i = 0; i <= bands; ++i) out.edges[static_cast<std::size_t>(i)] = static_cast<double>(i) / bands;
  out.edges.back() = 1.0;
  out.values.reserve(static_cast<std::size_t>(bands));
  for (int i = 0; i < bands; ++i) {
    double c = partial_transport_cost(a, ref, out.edges[static_cast<std::size_t>(i)],
                                      out.edges[static_cast<std::size_t>(i) + 1]);
    if (post == PostTransform::kLog1p) c = std::log1p(c);
    out.values.push_back(c);
  }
  return out;
}

std::vector<FeatureVector> classwise_transport_cost_features(
    const EmpiricalMeasure& a, std::span<const EmpiricalMeasure> refs, int bands,
    PostTransform post) {
  if (refs.empty()) raise(ErrorKind::kDomain, "need at least one reference measure");
  std::vector<FeatureVector> out;
  out.reserve(refs.size());
  for (const auto& ref : refs) out.push_back(transport_cost_features(a, ref, bands, post));
  return out;
}

FeatureVector js_bin_features(const SortedSamples& x, const SortedSamples& y, int bins) {
  JsDivergence js = binned_js_divergence(x, y, bins);
  return {FeatureKind::kJsBins, std::move(js.per_bin), std::move(js.edges)};
}

FeatureVector hausdorff_features(const SortedSamples& x, const SortedSamples& y) {
  return {FeatureKind::kHausdorffPair,
          {directed_hausdorff(x, y), directed_hausdorff(y, x)},
          {}};
}

void standardize_columns(std::span<FeatureVector> batch) {
  if (batch.empty()) return;
  const std::size_t width = batch.front().values.size();
  for (const auto& f : batch) {
    if (f.values.size() != width) raise(ErrorKind::kSizeMismatch, "feature vectors differ in length");
  }
  const double n = static_cast<double>(batch.size());
  for (std::size_t c = 0; c < width; ++c) {
    double mean = 0.0;
    for (const auto& f : batch) mean += f.values[c];
    mean /= n;
    double var = 0.0;
    for (const auto& f : batch) var += (f.values[c] - mean) * (f.values[c] - mean);
    const double sd = std::sqrt(var / n);
    for (auto& f : batch) {
      f.values[c] -= mean;
      if (sd > 0.0) f.values[c] /= sd;
    }
  }
}

}  // namespace wfinite
