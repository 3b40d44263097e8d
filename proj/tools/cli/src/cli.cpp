#include "wfinite_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "wfinite/error.hpp"

namespace wfinite::cli {
namespace {

constexpr std::uint64_t kFallbackSeed = 1;
constexpr const char* kSeedVariable = "WFINITE_SEED";

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedVariable);
  if (env == nullptr || *env == '\0') return kFallbackSeed;
  std::uint64_t seed = 0;
  const char* end = env + std::char_traits<char>::length(env);
  const auto [p, ec] = std::from_chars(env, end, seed);
  if (ec != std::errc() || p != end) {
    throw InputError(kExitUsage, std::string(kSeedVariable) + " is not an unsigned integer");
  }
  return seed;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain:
    case ErrorKind::kDegenerateLimit:
      return kExitUsage;
    default:
      return kExitData;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-sample Wasserstein distances for point processes", "wfinite"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "wfinite 0.1.0");

  CommonOptions common;
  std::string format = "csv";
  std::string output;
  std::optional<std::uint64_t> seed;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "jsonl"}))
        ->capture_default_str();
    sub->add_option("--output,-o", output, "Write the table to this file instead of stdout");
    sub->add_option("--seed", seed, std::string("Random seed (default: $") + kSeedVariable + ")");
    sub->add_option("--threads", common.threads, "Worker threads, 0 = all cores")
        ->capture_default_str();
    sub->add_option("--trials", common.trials, "Monte-Carlo trials")->check(CLI::PositiveNumber);
  };

  W1Options w1;
  auto* w1_cmd = app.add_subcommand("w1", "W1 distance between two sample files");
  w1_cmd->add_option("first", w1.first, "First sample file")->required();
  w1_cmd->add_option("second", w1.second, "Second sample file")->required();
  w1_cmd->add_flag("--plan", w1.plan, "Emit the transport plan");
  add_common(w1_cmd);

  ClosedFormOptions cf;
  auto* cf_cmd = app.add_subcommand("closed-form", "Mean and variance of |x_k - y_l|");
  cf_cmd->add_option("--rate1", cf.rate1, "Rate of the first process")->required();
  cf_cmd->add_option("--rate2", cf.rate2, "Rate of the second process")->required();
  cf_cmd->add_option("--k", cf.k, "Order statistic of the first process")->required();
  cf_cmd->add_option("--l", cf.l, "Order statistic of the second process")->required();
  cf_cmd->add_option("--shift", cf.shift, "Translation applied to the first process");
  add_common(cf_cmd);

  ExperimentOptions ex;
  auto* ex_cmd = app.add_subcommand("experiment", "Reproduce an experiment table");
  ex_cmd->add_option("name", ex.name, "fig2 | fig3 | figB1 | shift | sliced-demo")->required();
  ex_cmd->add_option("--rate1", ex.rate1, "First rate (figB1, shift)");
  ex_cmd->add_option("--rate2", ex.rate2, "Second rate (figB1, shift)");
  ex_cmd->add_option("--k-max", ex.k_max, "Largest order statistic (figB1)");
  ex_cmd->add_option("--n", ex.n, "Samples per measure (fig2)");
  ex_cmd->add_option("--grid-lo", ex.grid_lo, "Smallest grid rate (fig2)");
  ex_cmd->add_option("--grid-hi", ex.grid_hi, "Largest grid rate (fig2)");
  ex_cmd->add_option("--grid-step", ex.grid_step, "Grid spacing (fig2)");
  ex_cmd->add_option("--shifts", ex.shifts, "Shift values (fig3, shift)")->delimiter(',');
  ex_cmd->add_option("--ratios", ex.ratios, "Rate ratios (fig3)")->delimiter(',');
  ex_cmd->add_option("--base-rate", ex.base_rate, "Reference rate (fig3)");
  ex_cmd->add_option("--bins", ex.bins, "Histogram bins (fig3)");
  ex_cmd->add_option("--order", ex.order, "Order statistic compared (fig3)");
  ex_cmd->add_option("--directions", ex.directions, "Projection directions (sliced-demo)");
  ex_cmd->add_option("--points", ex.points, "Cloud size (sliced-demo)");
  add_common(ex_cmd);

  FeatureOptions ft;
  auto* ft_cmd = app.add_subcommand("features", "Feature rows of sample files against a reference");
  ft_cmd->add_option("kind", ft.kind, "sd | js | hausdorff")
      ->required()
      ->check(CLI::IsMember({"sd", "js", "hausdorff"}));
  ft_cmd->add_option("inputs", ft.inputs, "Input sample files")->required();
  ft_cmd->add_option("--reference", ft.reference, "Reference sample file")->required();
  ft_cmd->add_option("--bands", ft.bands, "Quantile bands (sd)")->capture_default_str();
  ft_cmd->add_option("--bins", ft.bins, "Histogram bins (js)")->capture_default_str();
  ft_cmd->add_flag("--log1p", ft.log1p, "Apply log1p to sd features");
  ft_cmd->add_flag("--standardize", ft.standardize, "Z-score each feature column");
  add_common(ft_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    common.format = format == "jsonl" ? Format::kJsonl : Format::kCsv;
    common.seed = seed ? *seed : default_seed();

    std::ofstream file;
    if (!output.empty()) {
      file.open(output);
      if (!file) throw InputError(kExitData, output + ": cannot open for writing");
    }
    std::ostream& sink = output.empty() ? out : file;

    if (app.got_subcommand(w1_cmd)) cmd_w1(w1, common, sink);
    else if (app.got_subcommand(cf_cmd)) cmd_closed_form(cf, common, sink);
    else if (app.got_subcommand(ex_cmd)) cmd_experiment(ex, common, sink);
    else cmd_features(ft, common, sink);
    sink.flush();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  return kExitOk;
}

}  // namespace wfinite::cli
