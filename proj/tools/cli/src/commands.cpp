#include "commands.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "wfinite/wfinite.hpp"

namespace wfinite::cli {
namespace {

// Seeds beyond the signed 64-bit range are written as text.
Cell seed_cell(std::uint64_t seed) {
  if (seed <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    return static_cast<std::int64_t>(seed);
  }
  return std::to_string(seed);
}

Meta base_meta(const std::string& command, const CommonOptions& common) {
  return {{"command", command}, {"seed", seed_cell(common.seed)}};
}

SortedSamples single_block(const std::string& path) {
  auto blocks = read_sample_file(path);
  if (blocks.size() != 1) {
    throw InputError(kExitData, path + ": expected one block of samples, found " +
                                    std::to_string(blocks.size()));
  }
  return std::move(blocks.front());
}

// Columns shared by every Monte-Carlo comparison row.
const std::vector<std::string> kReportColumns = {"quantity", "closed_form", "mc_mean",
                                                 "mc_std_error", "trials", "z_score", "pass"};

void append_report(std::vector<Cell>& row, const ValidationReport& r) {
  row.insert(row.end(), {r.quantity, r.closed_form, r.mc.mean, r.mc.std_error,
                         r.mc.trials, r.z_score, r.pass});
}

std::vector<std::string> concat(std::vector<std::string> head,
                                const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

void experiment_figb1(const ExperimentOptions& o, const CommonOptions& c, std::ostream& out) {
  const double r1 = o.rate1.value_or(0.3), r2 = o.rate2.value_or(0.8);
  const int k_max = o.k_max.value_or(100);
  const std::int64_t trials = c.trials.value_or(20000);
  double limit = std::numeric_limits<double>::quiet_NaN();
  if (r1 != r2) limit = limiting_normalized_distance(r1, r2).mean;

  Meta meta = base_meta("experiment", c);
  meta.insert(meta.end(), {{"experiment", std::string("figB1")}, {"rate1", r1}, {"rate2", r2},
                           {"k_max", std::int64_t{k_max}}, {"trials", trials}, {"limit", limit}});
  TableWriter table(out, c.format, meta,
                    concat({"k"}, concat(kReportColumns, {"normalized_closed_form",
                                                          "normalized_mc_mean",
                                                          "normalized_mc_std_error"})));
  const auto reports = validate_expected_distance(r1, r2, k_max, trials, SpikeSeed{c.seed, 0},
                                                  {c.threads, kDefaultZThreshold});
  for (const auto& r : reports) {
    const double k = r.parameter("k");
    std::vector<Cell> row{static_cast<std::int64_t>(k)};
    append_report(row, r);
    row.insert(row.end(), {r.closed_form / k, r.mc.mean / k, r.mc.std_error / k});
    table.row(row);
  }
}

void experiment_fig2(const ExperimentOptions& o, const CommonOptions& c, std::ostream& out) {
  const double lo = o.grid_lo.value_or(1.0), hi = o.grid_hi.value_or(5.0);
  const double step = o.grid_step.value_or(0.25);
  const int n = o.n.value_or(20);
  const std::int64_t trials = c.trials.value_or(2000);
  if (!(step > 0.0) || !(hi >= lo)) raise(ErrorKind::kDomain, "grid needs step > 0 and hi >= lo");
  std::vector<double> grid;
  const auto count = static_cast<int>(std::floor((hi - lo) / step + 1e-9)) + 1;
  for (int i = 0; i < count; ++i) grid.push_back(lo + step * i);

  const auto surface = validate_wasserstein_surface(grid, n, trials, SpikeSeed{c.seed, 0},
                                                    {c.threads, kDefaultZThreshold});
  std::int64_t passed = 0;
  for (const auto& cell : surface.cells) passed += cell.pass ? 1 : 0;

  Meta meta = base_meta("experiment", c);
  meta.insert(meta.end(), {{"experiment", std::string("fig2")}, {"grid_lo", lo}, {"grid_hi", hi},
                           {"grid_step", step}, {"n", std::int64_t{n}}, {"trials", trials},
                           {"diagonal_minimum", surface.diagonal_minimum},
                           {"slices", static_cast<std::int64_t>(surface.slices.size())},
                           {"cells_passing", passed}});
  TableWriter table(out, c.format, meta,
                    concat({"rate1", "rate2", "harmonic_mean", "on_diagonal"}, kReportColumns));
  for (const auto& r : surface.cells) {
    const double a = r.parameter("rate1"), b = r.parameter("rate2");
    std::vector<Cell> row{a, b, 2.0 * a * b / (a + b), a == b};
    append_report(row, r);
    table.row(row);
  }
}

void experiment_fig3(const ExperimentOptions& o, const CommonOptions& c, std::ostream& out) {
  Fig3Config config = default_fig3_config();
  if (!o.shifts.empty()) config.shifts = o.shifts;
  if (!o.ratios.empty()) config.ratios = o.ratios;
  if (o.base_rate) config.base_rate = *o.base_rate;
  if (o.bins) config.bins = *o.bins;
  if (o.order) config.order = *o.order;
  const std::int64_t trials = c.trials.value_or(1000);

  Meta meta = base_meta("experiment", c);
  meta.insert(meta.end(), {{"experiment", std::string("fig3")}, {"base_rate", config.base_rate},
                           {"bins", std::int64_t{config.bins}}, {"order", std::int64_t{config.order}},
                           {"trials", trials}});
  const std::vector<std::string> metrics = {"w1", "hausdorff", "directed_hausdorff_ref",
                                            "directed_hausdorff_other", "js", "order_gap"};
  std::vector<std::string> columns = {"shift", "ratio"};
  for (const auto& m : metrics) {
    columns.push_back(m);
    columns.push_back(m + "_std_error");
  }
  columns.insert(columns.end(), {"trials_used", "skipped_empty", "skipped_order"});
  TableWriter table(out, c.format, meta, columns);

  for (const auto& r : run_fig3_experiment(config, trials, SpikeSeed{c.seed, 0}, {c.threads, kDefaultZThreshold})) {
    std::vector<Cell> row{r.shift, r.ratio};
    for (const auto* e : {&r.w1, &r.hausdorff, &r.directed_hausdorff_ref,
                          &r.directed_hausdorff_other, &r.js, &r.order_gap}) {
      row.push_back(e->mean);
      row.push_back(e->std_error);
    }
    row.insert(row.end(), {r.w1.trials, r.skipped_empty, r.skipped_order});
    table.row(row);
  }
}

void experiment_shift(const ExperimentOptions& o, const CommonOptions& c, std::ostream& out) {
  const double r1 = o.rate1.value_or(0.3), r2 = o.rate2.value_or(0.8);
  const std::int64_t trials = c.trials.value_or(20000);
  std::vector<double> shifts = o.shifts;
  if (shifts.empty()) {
    for (int s = -10; s <= 10; ++s) shifts.push_back(s);
  }
  Meta meta = base_meta("experiment", c);
  meta.insert(meta.end(), {{"experiment", std::string("shift")}, {"rate1", r1}, {"rate2", r2},
                           {"trials", trials}});
  TableWriter table(out, c.format, meta, concat({"shift", "asymptote"}, kReportColumns));
  const auto reports = validate_shift(r1, r2, shifts, trials, SpikeSeed{c.seed, 0},
                                      {c.threads, kDefaultZThreshold});
  for (const auto& r : reports) {
    const double s = r.parameter("shift");
    // Large-|shift| behaviour of the mean; only meaningful for the "mean" rows.
    const double asymptote = s >= 0 ? s + 1.0 / r1 - 1.0 / r2 : -s + 1.0 / r2 - 1.0 / r1;
    std::vector<Cell> row{s, r.quantity == "mean" ? asymptote : std::numeric_limits<double>::quiet_NaN()};
    append_report(row, r);
    table.row(row);
  }
}

void experiment_sliced(const ExperimentOptions& o, const CommonOptions& c, std::ostream& out) {
  const int points = o.points.value_or(200);
  const int directions = o.directions.value_or(10000);
  if (points < 1) raise(ErrorKind::kDomain, "points must be >= 1");

  // Gaussian cloud in the plane and its translate by a unit vector.
  Engine engine(SpikeSeed{c.seed, 1});
  std::normal_distribution<double> normal;
  std::vector<double> coords(2 * static_cast<std::size_t>(points));
  for (double& v : coords) v = normal(engine);
  std::vector<double> moved = coords;
  for (std::size_t i = 0; i < moved.size(); i += 2) moved[i] += 1.0;

  const PointCloud a(2, coords), b(2, moved);
  const MCEstimate est = sliced_w1(a, b, directions, SpikeSeed{c.seed, 0});
  const double reference = 2.0 / std::numbers::pi;

  Meta meta = base_meta("experiment", c);
  meta.insert(meta.end(), {{"experiment", std::string("sliced-demo")}, {"points", std::int64_t{points}},
                           {"directions", std::int64_t{directions}}, {"translation", 1.0}});
  TableWriter table(out, c.format, meta,
                    {"directions", "sliced_w1", "std_error", "reference", "z_score"});
  table.row({est.trials, est.mean, est.std_error, reference,
             est.std_error > 0 ? (est.mean - reference) / est.std_error : 0.0});
}

}  // namespace

void cmd_w1(const W1Options& opts, const CommonOptions& common, std::ostream& out) {
  const SortedSamples x = single_block(opts.first);
  const SortedSamples y = single_block(opts.second);
  const auto a = EmpiricalMeasure::uniform(x);
  const auto b = EmpiricalMeasure::uniform(y);
  const double w1 = w1_general(a, b);

  Meta meta = base_meta("w1", common);
  meta.insert(meta.end(), {{"first", opts.first}, {"second", opts.second}});
  if (!opts.plan) {
    TableWriter table(out, common.format, meta, {"w1", "size_first", "size_second"});
    table.row({w1, static_cast<std::int64_t>(x.size()), static_cast<std::int64_t>(y.size())});
    return;
  }
  meta.emplace_back("w1", w1);
  TableWriter table(out, common.format, meta,
                    {"source", "target", "mass", "source_atom", "target_atom"});
  for (const auto& e : northwest_corner_plan(a, b).entries) {
    table.row({static_cast<std::int64_t>(e.source), static_cast<std::int64_t>(e.target), e.mass,
               a.atoms()[e.source], b.atoms()[e.target]});
  }
}

void cmd_closed_form(const ClosedFormOptions& opts, const CommonOptions& common,
                     std::ostream& out) {
  const ClosedFormMoment m =
      opts.shift ? shifted_expected_distance(opts.rate1, opts.rate2, opts.k, opts.l, *opts.shift)
                 : expected_distance(opts.rate1, opts.rate2, opts.k, opts.l);
  Meta meta = base_meta("closed-form", common);
  TableWriter table(out, common.format, meta,
                    {"rate1", "rate2", "k", "l", "shift", "mean", "variance", "stddev"});
  table.row({opts.rate1, opts.rate2, std::int64_t{opts.k}, std::int64_t{opts.l},
             opts.shift.value_or(0.0), m.mean, m.variance, m.stddev()});
}

void cmd_experiment(const ExperimentOptions& opts, const CommonOptions& common,
                    std::ostream& out) {
  if (opts.name == "figB1") return experiment_figb1(opts, common, out);
  if (opts.name == "fig2") return experiment_fig2(opts, common, out);
  if (opts.name == "fig3") return experiment_fig3(opts, common, out);
  if (opts.name == "shift") return experiment_shift(opts, common, out);
  if (opts.name == "sliced-demo") return experiment_sliced(opts, common, out);
  std::string names;
  for (const auto& n : kExperimentNames) names += (names.empty() ? "" : ", ") + n;
  throw InputError(kExitUsage, "unknown experiment '" + opts.name + "'; valid names: " + names);
}

void cmd_features(const FeatureOptions& opts, const CommonOptions& common, std::ostream& out) {
  const SortedSamples ref = single_block(opts.reference);
  const auto ref_measure = EmpiricalMeasure::uniform(ref);

  struct Labeled {
    std::string input;
    std::int64_t block;
    FeatureVector features;
  };
  std::vector<Labeled> rows;
  for (const auto& path : opts.inputs) {
    const auto blocks = read_sample_file(path);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      FeatureVector f;
      if (opts.kind == "sd") {
        f = transport_cost_features(EmpiricalMeasure::uniform(blocks[b]), ref_measure, opts.bands,
                                    opts.log1p ? PostTransform::kLog1p : PostTransform::kNone);
      } else if (opts.kind == "js") {
        f = js_bin_features(blocks[b], ref, opts.bins);
      } else {
        f = hausdorff_features(blocks[b], ref);
      }
      rows.push_back({path, static_cast<std::int64_t>(b), std::move(f)});
    }
  }
  if (opts.standardize) {
    std::vector<FeatureVector> batch;
    for (auto& r : rows) batch.push_back(r.features);
    standardize_columns(batch);
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].features = std::move(batch[i]);
  }

  std::vector<std::string> columns = {"input", "block"};
  if (opts.kind == "hausdorff") {
    columns.insert(columns.end(), {"directed_input_to_reference", "directed_reference_to_input"});
  } else {
    const auto width = rows.front().features.values.size();
    for (std::size_t i = 0; i < width; ++i) columns.push_back(opts.kind + "_" + std::to_string(i));
  }
  Meta meta = base_meta("features", common);
  meta.insert(meta.end(), {{"kind", opts.kind}, {"reference", opts.reference},
                           {"bands", std::int64_t{opts.bands}}, {"bins", std::int64_t{opts.bins}},
                           {"log1p", opts.log1p}, {"standardize", opts.standardize}});
  TableWriter table(out, common.format, meta, columns);
  for (const auto& r : rows) {
    std::vector<Cell> row{r.input, r.block};
    for (double v : r.features.values) row.push_back(v);
    table.row(row);
  }
}

}  // namespace wfinite::cli
