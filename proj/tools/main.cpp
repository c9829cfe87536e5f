#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "experiment.hpp"

namespace {

using ppcf::cli::Setting;

// Flag name -> config key. Flags override values from --config.
const std::vector<std::pair<std::string, std::string>> kFlagKeys{
    {"--gamma", "gamma"},       {"--epsilon", "epsilon"},     {"--scale", "scale"},
    {"--alpha1", "alpha1"},     {"--alpha2", "alpha2"},       {"--grid-h", "h"},
    {"--l0", "l0"},             {"--r0", "r0"},               {"--ds", "ds"},
    {"--horizon", "horizon_T"}, {"--domain", "domain"},       {"--level", "level"},
    {"--outside", "outside"},   {"--threads", "threads"},     {"--out", "out"},
    {"--emit", "emit"},         {"--eval-box", "eval_box"},   {"--benchmark", "benchmark"},
    {"--radius", "radius"},     {"--snapshots", "snapshots"},
};

struct FlagValues {
  std::optional<std::string> config;
  std::map<std::string, std::optional<std::string>> values;
};

void add_experiment_flags(CLI::App& cmd, FlagValues& flags) {
  cmd.add_option("--config", flags.config, "key=value configuration file");
  for (const auto& [flag, key] : kFlagKeys) {
    cmd.add_option(flag, flags.values[key], "sets '" + key + "'");
  }
}

std::vector<Setting> collect(const FlagValues& flags) {
  std::vector<Setting> settings;
  for (const auto& [flag, key] : kFlagKeys) {
    const auto& v = flags.values.at(key);
    if (v) settings.emplace_back(key, *v);
  }
  return settings;
}

ppcf::cli::ExperimentSpec base_spec(const FlagValues& flags) {
  ppcf::cli::ExperimentSpec spec;
  if (flags.config) spec = ppcf::cli::load_config_file(*flags.config);
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-person game solver for positive power curvature flow of plane curves"};
  app.require_subcommand(1);

  FlagValues solve_flags;
  auto* solve = app.add_subcommand("solve", "run one experiment end to end");
  add_experiment_flags(*solve, solve_flags);

  FlagValues table_flags;
  int table_id = 0;
  auto* table = app.add_subcommand("table", "reproduce one of the error tables 1..6");
  table->add_option("id", table_id, "table number")->required();
  add_experiment_flags(*table, table_flags);

  double perturbation = 0.0;
  auto* selfcheck = app.add_subcommand("selfcheck", "run the built-in consistency checks");
  selfcheck->add_option("--perturb-cgamma", perturbation,
                        "relative perturbation of c_gamma in the sup check (sensitivity test)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ppcf::cli::kConfigError;
  }

  try {
    if (solve->parsed()) {
      ppcf::cli::ExperimentSpec spec = base_spec(solve_flags);
      ppcf::cli::apply_settings(spec, collect(solve_flags));
      return ppcf::cli::cmd_solve(spec, std::cout, std::cerr);
    }
    if (table->parsed()) {
      const ppcf::cli::ExperimentSpec base = base_spec(table_flags);
      return ppcf::cli::cmd_table(table_id, collect(table_flags), base, std::cout, std::cerr);
    }
    return ppcf::cli::cmd_selfcheck({perturbation}, std::cout);
  } catch (const ppcf::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return ppcf::cli::kConfigError;
  }
}
