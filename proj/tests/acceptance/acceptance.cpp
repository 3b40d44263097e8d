// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: wfinite_acceptance [--criterion N] [--seed S]

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "wfinite/wfinite.hpp"

namespace {

using namespace wfinite;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    if (detail.tellp() > 0) detail << "; ";
    detail << (ok ? "" : "FAILED ") << what;
  }
};

std::string fmt(double v, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::uint64_t g_seed = 20240601;

// Fraction of reports passing and the largest |z|.
std::pair<double, double> pass_rate(const std::vector<ValidationReport>& reports) {
  std::size_t passed = 0;
  double worst = 0.0;
  for (const auto& r : reports) {
    passed += r.pass ? 1 : 0;
    worst = std::max(worst, std::abs(r.z_score));
  }
  return {static_cast<double>(passed) / reports.size(), worst};
}

void criterion1(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = validate_expected_distance(0.3, 0.8, 100, 20000, SpikeSeed{g_seed, 1});
  const double elapsed = seconds_since(start);
  const auto [rate, worst] = pass_rate(reports);
  const double limit = limiting_normalized_distance(0.3, 0.8).mean;
  double normalized = 0.0;
  for (const auto& r : reports) {
    if (r.quantity == "mean" && r.parameter("k") == 100) normalized = r.mc.mean / 100.0;
  }
  const double gap = std::abs(normalized / limit - 1.0);
  o.check(gap < 0.02, "MC E[s_100]=" + fmt(normalized) + " vs 25/12 gap " + fmt(100 * gap, 3) + "% (<2%)");
  o.check(rate == 1.0, "mean/std |z|<=4 for all k<=100 (max |z|=" + fmt(worst, 3) + ")");
  o.check(elapsed < 60.0, "runtime " + fmt(elapsed, 3) + "s (<60s)");
}

void criterion2(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(g_seed);
  std::uniform_real_distribution<double> rate(0.2, 5.0);
  std::uniform_int_distribution<int> order(1, 30);
  std::vector<ValidationReport> all;
  for (int t = 0; t < 50; ++t) {
    const double r1 = rate(rng), r2 = rate(rng);
    const int k = order(rng), l = order(rng);
    const auto reports = validate_distance_pair(r1, r2, k, l, 20000, SpikeSeed{g_seed, 2}.substream(t));
    all.insert(all.end(), reports.begin(), reports.end());
  }
  const double elapsed = seconds_since(start);
  const auto [frac, worst] = pass_rate(all);
  o.check(frac >= 0.99, fmt(100 * frac, 4) + "% of " + std::to_string(all.size()) +
                            " mean/std comparisons at |z|<=4 (>=99%, max |z|=" + fmt(worst, 3) + ")");
  o.check(elapsed < 120.0, "runtime " + fmt(elapsed, 3) + "s (<120s)");
}

void criterion3(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> grid;
  for (int i = 0; i <= 16; ++i) grid.push_back(1.0 + 0.25 * i);
  const auto surface = validate_wasserstein_surface(grid, 20, 2000, SpikeSeed{g_seed, 3});
  const double elapsed = seconds_since(start);
  const auto [frac, worst] = pass_rate(surface.cells);
  std::size_t on_diagonal = 0;
  for (const auto& s : surface.slices) on_diagonal += s.argmin_on_diagonal ? 1 : 0;
  o.check(surface.diagonal_minimum, "closed-form argmin on diagonal for " + std::to_string(on_diagonal) + "/" +
                                        std::to_string(surface.slices.size()) + " harmonic slices");
  o.check(frac >= 0.99, fmt(100 * frac, 4) + "% of " + std::to_string(surface.cells.size()) +
                            " cells at |z|<=4 (>=99%, max |z|=" + fmt(worst, 3) + ")");
  o.check(elapsed < 300.0, "runtime " + fmt(elapsed, 3) + "s (<300s)");
}

void criterion4(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const double r1 = 0.3, r2 = 0.8;
  std::vector<double> shifts;
  for (int s = -10; s <= 10; ++s) shifts.push_back(s);
  const SpikeSeed seed{g_seed, 4};
  const auto reports = validate_shift(r1, r2, shifts, 20000, seed);
  const auto plain = validate_expected_distance(r1, r2, 1, 20000, seed);
  const double elapsed = seconds_since(start);
  const auto [frac, worst] = pass_rate(reports);
  o.check(frac == 1.0, "mean/std |z|<=4 at all 21 shifts (max |z|=" + fmt(worst, 3) + ")");

  const auto at_zero = shifted_expected_distance(r1, r2, 1, 1, 0.0);
  const auto prop1 = expected_distance(r1, r2, 1, 1);
  bool exact = at_zero.mean == prop1.mean && at_zero.variance == prop1.variance;
  for (const auto& r : reports) {
    if (r.parameter("shift") != 0.0) continue;
    const auto& ref = r.quantity == "mean" ? plain[0] : plain[1];
    exact = exact && r.mc.mean == ref.mc.mean && r.closed_form == ref.closed_form;
  }
  o.check(exact, "shift 0 reduces exactly to the unshifted closed form and MC column");

  for (double s : {10.0, -10.0}) {
    const double mean = shifted_expected_distance(r1, r2, 1, 1, s).mean;
    const double asymptote = s > 0 ? s + 1 / r1 - 1 / r2 : -(s + 1 / r1 - 1 / r2);
    const double gap = std::abs(mean / asymptote - 1.0);
    o.check(gap <= 1e-3, "shift " + fmt(s, 3) + ": mean " + fmt(mean, 8) + " vs asymptote " + fmt(asymptote, 8) +
                             " gap " + fmt(100 * gap, 3) + "% (<=0.1%)");
  }
  o.check(elapsed < 60.0, "runtime " + fmt(elapsed, 3) + "s (<60s)");
}

void criterion5(Outcome& o) {
  const double w100 = expected_wasserstein(1, 2, 100), w400 = expected_wasserstein(1, 2, 400);
  const double gap100 = std::abs(w100 / leading_order_wasserstein(1, 2, 100) - 1.0);
  const double gap400 = std::abs(w400 / leading_order_wasserstein(1, 2, 400) - 1.0);
  o.check(std::abs(w100 / 25.25 - 1.0) <= 0.10, "E[W] at N=100 is " + fmt(w100, 8) + " vs 25.25 (gap " +
                                                   fmt(100 * gap100, 3) + "%, <=10%)");
  o.check(gap400 < gap100, "gap at N=400 " + fmt(100 * gap400, 3) + "% < gap at N=100");
}

void criterion6(Outcome& o) {
  std::mt19937_64 rng(g_seed + 6);
  double worst_lp = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    std::size_t n = 0, m = 0;
    do {
      n = 1 + rng() % 6;
      m = 1 + rng() % 6;
    } while (n == m);
    const auto xa = testing::random_values(rng, n, 0, 10), xb = testing::random_values(rng, m, 0, 10);
    const auto ma = testing::random_masses(rng, n), mb = testing::random_masses(rng, m);
    const double w = w1_general(EmpiricalMeasure::weighted(xa, ma), EmpiricalMeasure::weighted(xb, mb));
    worst_lp = std::max(worst_lp, std::abs(w - testing::transport_lp_minimum(xa, ma, xb, mb)));
  }
  o.check(worst_lp <= 1e-9, "200 unequal-size pairs vs LP oracle, max gap " + fmt(worst_lp, 3) + " (<=1e-9)");

  double worst_plan = 0.0;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 1 + rng() % 500, m = 1 + rng() % 500;
    const auto a = make_uniform_empirical(testing::random_values(rng, n, -5, 5));
    const auto b = make_uniform_empirical(testing::random_values(rng, m, -2, 8));
    worst_plan = std::max(worst_plan, std::abs(northwest_corner_plan(a, b).cost(a, b) - w1_general(a, b)));
  }
  o.check(worst_plan <= 1e-12, "NW plan cost vs quantile integral (sizes<=500), max gap " + fmt(worst_plan, 3) +
                                   " (<=1e-12)");
}

void criterion7(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  Fig3Config config = default_fig3_config();
  config.shifts = {-2.0, -1.5, -1.2, 0.0, 0.5, 1.0, 1.2, 1.5, 2.0};
  config.ratios = {std::exp(-2.0), std::exp(-1.0), 1.0, std::exp(1.0), std::exp(2.0)};
  const auto rows = run_fig3_experiment(config, 1000, SpikeSeed{g_seed, 7});
  const double elapsed = seconds_since(start);
  auto row = [&](double shift, double ratio) -> const Fig3Row& {
    for (const auto& r : rows) {
      if (r.shift == shift && std::abs(r.ratio - ratio) < 1e-12) return r;
    }
    throw std::logic_error("missing fig3 row");
  };

  double worst_js = 0.0;
  for (const auto& r : rows) {
    if (std::abs(r.shift) >= 1.2) worst_js = std::max(worst_js, std::abs(r.js.mean / std::numbers::ln2 - 1.0));
  }
  o.check(worst_js <= 0.01, "(a) JS within " + fmt(100 * worst_js, 3) + "% of ln 2 for |shift|>=1.2 (<=1%)");

  const auto& base = row(0.0, 1.0);
  const auto& high = row(0.0, std::exp(2.0));
  const double w1_change = high.w1.mean / base.w1.mean - 1.0;
  const double h_change = std::abs(high.hausdorff.mean / base.hausdorff.mean - 1.0);
  o.check(w1_change > 1.0, "(b) W1 at r=e^2 " + fmt(high.w1.mean, 4) + " vs r=1 " + fmt(base.w1.mean, 4) +
                               " (+" + fmt(100 * w1_change, 4) + "%, >100%)");
  o.check(h_change < 0.20, "(b) Hausdorff at r=e^2 " + fmt(high.hausdorff.mean, 4) + " vs r=1 " +
                               fmt(base.hausdorff.mean, 4) + " (change " + fmt(100 * h_change, 4) + "%, <20%)");

  bool monotone = true;
  double prev = -1.0;
  std::string series;
  for (double s : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const double w = row(s, 1.0).w1.mean;
    monotone = monotone && w >= prev;
    prev = w;
    series += (series.empty() ? "" : ",") + fmt(w, 4);
  }
  o.check(monotone, "(c) W1 nondecreasing in |shift| at r=1: " + series);
  o.check(elapsed < 180.0, "runtime " + fmt(elapsed, 3) + "s (<180s)");
}

void criterion8(Outcome& o) {
  double worst = 0.0;
  for (int k = 1; k <= 5; ++k) {
    for (int l = 1; l <= 5; ++l) {
      const double exact = expected_distance(0.6, 1.7, k, l).mean;
      const double quad = expected_distance_time_varying(RateFunction::constant(0.6), RateFunction::constant(1.7),
                                                         k, l, DistancePower::kAbsolute);
      worst = std::max(worst, std::abs(quad / exact - 1.0));
    }
  }
  o.check(worst <= 1e-5, "constant-rate quadrature vs closed form for (k,l)<=(5,5), max rel gap " + fmt(worst, 3) +
                             " (<=1e-5)");

  const auto mu = RateFunction::piecewise_linear({0.0, 4.0, 10.0}, {2.0, 6.0, 3.0});
  const auto nu = RateFunction::piecewise_linear({1.0, 3.0, 12.0}, {8.0, 1.0, 4.0});
  const double quad = expected_distance_time_varying(mu, nu, 1, 1, DistancePower::kSquared);
  constexpr std::size_t pairs = 1000000;
  std::vector<double> v(pairs);
  const SpikeSeed seed{g_seed, 8};
  parallel_for(pairs, 0, [&](std::size_t i) {
    Engine e(seed.substream(i));
    const double d = mu.inverse_cumulative(e.exponential()) - nu.inverse_cumulative(e.exponential());
    v[i] = d * d;
  });
  const auto est = make_estimate(v, seed);
  const double z = (est.mean - quad) / est.std_error;
  o.check(std::abs(z) <= 3.0, "piecewise-linear power-2 quadrature " + fmt(quad, 8) + " vs 1e6-pair MC " +
                                  fmt(est.mean, 8) + " (z=" + fmt(z, 3) + ", |z|<=3)");
}

void criterion9(Outcome& o) {
  Engine engine(SpikeSeed{g_seed, 9});
  std::normal_distribution<double> normal;
  std::vector<double> coords(2 * 100);
  for (double& c : coords) c = normal(engine);
  std::vector<double> moved = coords;
  for (std::size_t i = 0; i < moved.size(); i += 2) {
    moved[i] += 0.6;
    moved[i + 1] += 0.8;
  }
  const auto est = sliced_w1(PointCloud(2, coords), PointCloud(2, moved), 10000, SpikeSeed{g_seed, 90});
  const double z = (est.mean - 2.0 / std::numbers::pi) / est.std_error;
  o.check(std::abs(z) <= 3.0, "sliced W1 of unit translation " + fmt(est.mean, 6) + " +- " + fmt(est.std_error, 3) +
                                  " vs 2/pi (z=" + fmt(z, 3) + ", |z|<=3)");
}

void criterion10(Outcome& o) {
  std::mt19937_64 rng(g_seed + 10);
  auto train = [&](std::size_t max_size) {
    return SortedSamples::from_unsorted(testing::random_values(rng, rng() % (max_size + 1), 0.0, 3.0));
  };
  std::uniform_real_distribution<double> qdist(0.0, 4.0);
  double worst_vp = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    const auto x = train(4), y = train(4);
    const double q = qdist(rng);
    const double oracle = testing::victor_purpura_exhaustive({x.begin(), x.end()}, {y.begin(), y.end()}, q);
    worst_vp = std::max(worst_vp, std::abs(victor_purpura(x, y, q) - oracle));
  }
  o.check(worst_vp <= 1e-12, "VP vs exhaustive matching on 500 instances, max gap " + fmt(worst_vp, 3));

  bool q0 = true;
  double worst_kfs = 0.0;
  for (int rep = 0; rep < 500; ++rep) {
    const auto x = train(12), y = train(12);
    const double diff = std::abs(static_cast<double>(x.size()) - static_cast<double>(y.size()));
    q0 = q0 && victor_purpura(x, y, 0.0) == diff;
    if (!x.empty() && !y.empty()) worst_kfs = std::max(worst_kfs, std::abs(kfs_distance(x, y, 1e8) - diff));
  }
  o.check(q0, "VP at q=0 equals the count difference exactly");
  o.check(worst_kfs <= 1e-3, "KFS at tau=1e8 vs count difference, max gap " + fmt(worst_kfs, 3) + " (<=1e-3)");

  double lo = INFINITY, hi = -INFINITY;
  for (int rep = 0; rep < 10000; ++rep) {
    const auto x = SortedSamples::from_unsorted(testing::random_values(rng, 1 + rng() % 30, 0.0, 1.0 + rng() % 4));
    const auto y = SortedSamples::from_unsorted(testing::random_values(rng, 1 + rng() % 30, 0.0, 1.0 + rng() % 4));
    const double js = binned_js_divergence(x, y, 10).total;
    lo = std::min(lo, js);
    hi = std::max(hi, js);
  }
  o.check(lo >= 0.0 && hi <= std::numbers::ln2, "JS total in [0, ln 2] on 1e4 pairs (observed [" + fmt(lo, 4) +
                                                     ", " + fmt(hi, 8) + "])");
}

const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> kCriteria = {
    {"order-statistic convergence (k<=100)", criterion1},
    {"expected-distance exactness on random tuples", criterion2},
    {"Wasserstein surface and harmonic-slice minimum", criterion3},
    {"support-shift formula", criterion4},
    {"leading-order approximation", criterion5},
    {"exact transport oracle", criterion6},
    {"synthetic dissimilarity comparison", criterion7},
    {"time-varying quadrature", criterion8},
    {"sliced translation law", criterion9},
    {"dissimilarity oracles", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (arg == "--seed" && i + 1 < argc) {
      g_seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      std::cerr << "usage: wfinite_acceptance [--criterion N] [--seed S]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(kCriteria.size())) {
    std::cerr << "criterion must be in 1.." << kCriteria.size() << "\n";
    return 2;
  }

  bool all = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    Outcome o;
    try {
      kCriteria[i].second(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << kCriteria[i].first
              << "): " << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
