#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "wfinite_cli/io.hpp"

namespace wfinite::cli {

struct CommonOptions {
  Format format = Format::kCsv;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  std::optional<std::int64_t> trials;
};

struct W1Options {
  std::string first;
  std::string second;
  bool plan = false;
};

struct ClosedFormOptions {
  double rate1 = 0.0;
  double rate2 = 0.0;
  int k = 1;
  int l = 1;
  std::optional<double> shift;
};

// Unset fields take per-experiment defaults.
struct ExperimentOptions {
  std::string name;
  std::optional<double> rate1;
  std::optional<double> rate2;
  std::optional<int> k_max;
  std::optional<int> n;
  std::optional<double> grid_lo;
  std::optional<double> grid_hi;
  std::optional<double> grid_step;
  std::vector<double> shifts;
  std::vector<double> ratios;
  std::optional<double> base_rate;
  std::optional<int> bins;
  std::optional<int> order;
  std::optional<int> directions;
  std::optional<int> points;
};

struct FeatureOptions {
  std::string kind;
  std::vector<std::string> inputs;
  std::string reference;
  int bands = 10;
  int bins = 10;
  bool log1p = false;
  bool standardize = false;
};

inline const std::vector<std::string> kExperimentNames = {"fig2", "fig3", "figB1", "shift",
                                                          "sliced-demo"};

void cmd_w1(const W1Options& opts, const CommonOptions& common, std::ostream& out);
void cmd_closed_form(const ClosedFormOptions& opts, const CommonOptions& common,
                     std::ostream& out);
void cmd_experiment(const ExperimentOptions& opts, const CommonOptions& common,
                    std::ostream& out);
void cmd_features(const FeatureOptions& opts, const CommonOptions& common,
                  std::ostream& out);

}  // namespace wfinite::cli
