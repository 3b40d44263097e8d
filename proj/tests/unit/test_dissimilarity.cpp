#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "../support/oracles.hpp"
#include "wfinite/dissimilarity.hpp"
#include "wfinite/error.hpp"
#include "wfinite/transport.hpp"

namespace wfinite {
namespace {

SortedSamples s(std::vector<double> v) { return SortedSamples::from_unsorted(std::move(v)); }

SortedSamples random_train(std::mt19937_64& rng, std::size_t max_size, double hi = 5.0) {
  return s(testing::random_values(rng, rng() % (max_size + 1), 0.0, hi));
}

void expect_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind);
  }
}

TEST(DirectedHausdorff, SpecExamples) {
  EXPECT_EQ(directed_hausdorff(s({0, 1}), s({0, 1, 2})), 0.0);
  EXPECT_EQ(directed_hausdorff(s({0, 1, 2}), s({0, 1})), 1.0);
  EXPECT_EQ(directed_hausdorff(s({0.5, 3}), s({0.5, 3})), 0.0);
  EXPECT_EQ(directed_hausdorff(s({0}), s({5})), 5.0);
  EXPECT_EQ(directed_hausdorff(s({5}), s({0})), 5.0);
  expect_kind(ErrorKind::kEmptyTrain, [] { directed_hausdorff(SortedSamples{}, s({1})); });
}

TEST(DirectedHausdorff, MatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 200; ++rep) {
    const auto x = s(testing::random_values(rng, 1 + rng() % 15, 0, 1));
    const auto y = s(testing::random_values(rng, 1 + rng() % 15, 0, 1));
    double brute = 0.0;
    for (double a : x) {
      double nearest = INFINITY;
      for (double b : y) nearest = std::min(nearest, std::abs(a - b));
      brute = std::max(brute, nearest);
    }
    EXPECT_EQ(directed_hausdorff(x, y), brute);
    EXPECT_EQ(hausdorff(x, y), std::max(brute, directed_hausdorff(y, x)));
  }
}

TEST(BinnedJs, IdenticalInputsGiveZero) {
  const auto x = s({0.1, 0.4, 0.45, 2.0});
  const auto js = binned_js_divergence(x, x, 10);
  EXPECT_EQ(js.total, 0.0);
  for (double v : js.per_bin) EXPECT_EQ(v, 0.0);
  EXPECT_EQ(js.edges.size(), 11u);
}

TEST(BinnedJs, DisjointSupportsSaturateAtLn2) {
  const auto x = s({0.0, 0.3, 0.7, 1.0});
  const auto y = s({2.0, 2.2, 2.9, 3.0});
  EXPECT_NEAR(binned_js_divergence(x, y, 10).total, std::numbers::ln2, 1e-15);
}

TEST(BinnedJs, HalfOverlapMatchesDirectFormula) {
  // Two bins over [0, 2]: P = (1, 0), Q = (1/2, 1/2).
  const auto x = s({0.2, 0.4});
  const auto y = s({0.0, 2.0});
  const auto js = binned_js_divergence(x, y, 2);
  const double v0 = 0.5 * (1.0 * std::log(1.0 / 0.75) + 0.5 * std::log(0.5 / 0.75));
  const double v1 = 0.5 * (0.5 * std::log(0.5 / 0.25));
  ASSERT_EQ(js.per_bin.size(), 2u);
  EXPECT_NEAR(js.per_bin[0], v0, 1e-15);
  EXPECT_NEAR(js.per_bin[1], v1, 1e-15);
  EXPECT_NEAR(js.total, v0 + v1, 1e-15);
}

TEST(BinnedJs, DegenerateRangeAndErrors) {
  EXPECT_EQ(binned_js_divergence(s({1, 1}), s({1}), 10).total, 0.0);
  expect_kind(ErrorKind::kEmptyTrain, [] { binned_js_divergence(SortedSamples{}, s({1}), 3); });
  EXPECT_THROW(binned_js_divergence(s({1}), s({2}), 0), Error);
}

TEST(BinnedJs, BoundedAndSymmetric) {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 500; ++rep) {
    const auto x = s(testing::random_values(rng, 1 + rng() % 20, 0, 1 + rng() % 3));
    const auto y = s(testing::random_values(rng, 1 + rng() % 20, 0, 1 + rng() % 3));
    const auto js = binned_js_divergence(x, y, 1 + static_cast<int>(rng() % 12));
    EXPECT_GE(js.total, 0.0);
    EXPECT_LE(js.total, std::numbers::ln2 + 1e-15);
    EXPECT_NEAR(binned_js_divergence(y, x, static_cast<int>(js.per_bin.size())).total, js.total, 1e-15);
  }
}

TEST(BinSamples, MassesSumToOne) {
  const auto pmf = bin_samples(s({0, 0.5, 1, 1}), 0, 1, 4);
  ASSERT_EQ(pmf.masses.size(), 4u);
  EXPECT_DOUBLE_EQ(pmf.masses[0], 0.25);
  EXPECT_DOUBLE_EQ(pmf.masses[2], 0.25);
  EXPECT_DOUBLE_EQ(pmf.masses[3], 0.5);
  EXPECT_TRUE(bin_samples(SortedSamples{}, 0, 1, 2).empty);
}

TEST(VictorPurpura, SpecExamples) {
  EXPECT_EQ(victor_purpura(s({1, 2, 3}), s({7}), 0.0), 2.0);
  EXPECT_NEAR(victor_purpura(s({1, 2}), s({1.1}), 1.0), 1.1, 1e-15);
  EXPECT_EQ(victor_purpura(s({0.3, 4}), s({0.3, 4}), 2.5), 0.0);
  EXPECT_EQ(victor_purpura(SortedSamples{}, s({1, 2}), 1.0), 2.0);
  EXPECT_THROW(victor_purpura(s({1}), s({2}), -1.0), Error);
}

TEST(VictorPurpura, MatchesExhaustiveMatching) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> qdist(0.0, 4.0);
  for (int rep = 0; rep < 500; ++rep) {
    const auto x = random_train(rng, 4, 3.0);
    const auto y = random_train(rng, 4, 3.0);
    const double q = qdist(rng);
    const std::vector<double> xv(x.begin(), x.end()), yv(y.begin(), y.end());
    EXPECT_NEAR(victor_purpura(x, y, q), testing::victor_purpura_exhaustive(xv, yv, q), 1e-12);
  }
}

TEST(VictorPurpura, MetricAndBounds) {
  std::mt19937_64 rng(4);
  for (int rep = 0; rep < 200; ++rep) {
    const auto a = random_train(rng, 8), b = random_train(rng, 8), c = random_train(rng, 8);
    const double q = 0.7;
    const double ab = victor_purpura(a, b, q);
    EXPECT_NEAR(ab, victor_purpura(b, a, q), 1e-12);
    EXPECT_LE(ab, victor_purpura(a, c, q) + victor_purpura(c, b, q) + 1e-12);
    EXPECT_LE(ab, static_cast<double>(a.size() + b.size()));
    if (!a.empty() && a.size() == b.size()) {
      EXPECT_LE(ab, q * a.size() * w1_equal_size(a, b) + 1e-12);
    }
  }
}

TEST(KfsDistance, SpecExamples) {
  const auto x = s({0.2, 1.0, 1.7});
  EXPECT_EQ(kfs_distance(x, x, 0.5), 0.0);
  const double d = 1.3, tau = 0.8;
  EXPECT_NEAR(kfs_distance(s({0}), s({d}), tau), std::sqrt(2 * (1 - std::exp(-d / tau))), 1e-15);
  EXPECT_NEAR(kfs_distance(s({0, 1, 2, 3, 4}), s({0.5, 1.5}), 1e8), 3.0, 1e-3);
  EXPECT_THROW(kfs_distance(x, x, 0.0), Error);
  EXPECT_THROW(kfs_distance(SortedSamples{}, x, 1.0), Error);
}

TEST(KfsDistance, MatchesGramForm) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    const auto xv = testing::random_values(rng, 1 + rng() % 50, 0, 2);
    const auto yv = testing::random_values(rng, 1 + rng() % 50, 0, 2);
    const double tau = 0.05 + 0.5 * (rng() % 10);
    const long double gram = testing::kernel_sum(xv, xv, tau) - 2 * testing::kernel_sum(xv, yv, tau) +
                             testing::kernel_sum(yv, yv, tau);
    const double d = kfs_distance(s(xv), s(yv), tau);
    EXPECT_NEAR(d * d, static_cast<double>(gram), 1e-9 * std::max(1.0L, gram));
    EXPECT_NEAR(d, kfs_distance(s(yv), s(xv), tau), 1e-12);
  }
}

TEST(SpikeCountDistance, SpecExamples) {
  const MultiChannelTrain a({s({1, 2, 3}), s({1, 2, 3}), s({1, 2, 3}), s({1, 2, 3})});
  const MultiChannelTrain b({s({1, 2, 3}), s({1, 2, 3}), s({1, 2, 3}), s({1, 2, 3, 4, 5, 6, 7})});
  EXPECT_EQ(spike_count_distance(a, a), 0.0);
  EXPECT_EQ(spike_count_distance(a, b), 4.0);
  const MultiChannelTrain c({s({1}), s({1, 2})});
  const MultiChannelTrain d({s({1, 2, 3, 4}), s({1, 2, 3, 4, 5, 6})});
  EXPECT_EQ(spike_count_distance(c, d), 5.0);
  const MultiChannelTrain empty({SortedSamples{}, SortedSamples{}});
  EXPECT_DOUBLE_EQ(spike_count_distance(empty, c), std::sqrt(5.0));
  expect_kind(ErrorKind::kChannelMismatch, [&] { spike_count_distance(a, c); });
  EXPECT_THROW(MultiChannelTrain({}), Error);
}

TEST(CompositeWasserstein, SpecExamples) {
  const MultiChannelTrain a({s({0, 1}), s({5, 6, 7})});
  EXPECT_EQ(composite_wasserstein(a, a), 0.0);
  const MultiChannelTrain one({s({0, 1})}), other({s({0, 1, 2})});
  EXPECT_EQ(composite_wasserstein(one, other),
            w1_general(make_uniform_empirical(std::vector<double>{0, 1}),
                       make_uniform_empirical(std::vector<double>{0, 1, 2})));
  const MultiChannelTrain shifted({s({3, 4}), s({9, 10, 11})});
  EXPECT_DOUBLE_EQ(composite_wasserstein(a, shifted), 5.0);
  expect_kind(ErrorKind::kChannelMismatch, [&] { composite_wasserstein(a, one); });
  const MultiChannelTrain hole({s({0, 1}), SortedSamples{}});
  expect_kind(ErrorKind::kEmptyTrain, [&] { composite_wasserstein(a, hole); });
}

}  // namespace
}  // namespace wfinite
