#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "experiment.hpp"
#include "ppcf/analytic.hpp"
#include "ppcf/levelset.hpp"

namespace ppcf::cli {

enum ExitCode : int {
  kSuccess = 0,
  kSelfcheckFailed = 1,
  kConfigError = 2,
  kRuntimeFault = 3,
};

struct SolveResult {
  ErrorReport errors;                 // circle benchmark only
  std::vector<std::size_t> steps;     // steps with recorded contour metrics
  std::vector<double> times;
  std::vector<ContourMetrics> metrics;
};

/// Validates the experiment (ConfigError on failure) and runs it, writing outputs
/// under spec.out_dir. Solver faults propagate as SolverFault.
SolveResult run_experiment(const ExperimentSpec& spec, std::ostream& log);

/// solve subcommand: prints "sup_linf=<v> sup_l1=<v>" for the circle benchmark.
int cmd_solve(const ExperimentSpec& spec, std::ostream& out, std::ostream& err);

struct TableRow {
  std::string label;  // e.g. "h=0.04"
  ExperimentSpec spec;
};

struct TablePlan {
  int id;
  std::string title;
  std::string sweep_key;
  std::vector<TableRow> rows;
};

/// Parameter sweep of table `id` (1..6); overrides are applied to every row
/// before the swept parameter is set. Throws ConfigError for unknown ids.
TablePlan table_plan(int id, const std::vector<Setting>& overrides, const ExperimentSpec& base = {});

int cmd_table(int id, const std::vector<Setting>& overrides, const ExperimentSpec& base,
              std::ostream& out, std::ostream& err);

struct SelfcheckOptions {
  double cost_perturbation = 0.0;  // relative change of c_gamma in the sup check
};

int cmd_selfcheck(const SelfcheckOptions& options, std::ostream& out);

}  // namespace ppcf::cli
