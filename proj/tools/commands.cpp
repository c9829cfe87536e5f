#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

namespace ppcf::cli {

namespace {

std::string num(double v, int precision = 17) {
  std::ostringstream out;
  out.precision(precision);
  out << v;
  return out.str();
}

void write_metrics_csv(const std::string& path, const SolveResult& r) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "k,t,mean_radius,min_radius,max_radius,area,radius_ratio\n" << std::setprecision(17);
  for (std::size_t n = 0; n < r.metrics.size(); ++n) {
    const ContourMetrics& m = r.metrics[n];
    out << r.steps[n] << ',' << r.times[n] << ',' << m.mean_radius << ',' << m.min_radius << ','
        << m.max_radius << ',' << m.enclosed_area << ',' << m.max_radius / m.min_radius << '\n';
  }
}

}  // namespace

SolveResult run_experiment(const ExperimentSpec& spec, std::ostream& log) {
  const GameConfig& cfg = spec.game;
  std::size_t steps = 0;
  try {
    steps = prepare(cfg).steps;
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  ExactFamily family;
  if (spec.benchmark == BenchmarkKind::Circle) {
    try {
      family = circle_family(CircleBenchmark(cfg.gamma, spec.radius));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    if (!(cfg.horizon < family.t_max)) {
      throw ConfigError("horizon " + num(cfg.horizon) + " reaches the extinction time " +
                        num(family.t_max));
    }
  } else {
    const double gamma = cfg.gamma;
    family.initial = InitialDatum{[gamma](Vec2 x) { return u0_ellipse(x, gamma); }, 0.0};
  }

  for (const std::string& w : validate_scaling(cfg)) log << "warning: " << w << '\n';

  const bool any_output = spec.emit.fields || spec.emit.contours || spec.emit.errors;
  const std::filesystem::path dir(spec.out_dir);
  if (any_output) std::filesystem::create_directories(dir);

  std::set<std::size_t> snapshots(spec.snapshots.begin(), spec.snapshots.end());
  if (snapshots.empty()) snapshots = {0, steps};

  SolveResult result;
  const double front_level = -cfg.contour_level;
  auto on_slice = [&](std::size_t k, double t, const ScalarField& slice) {
    if (!snapshots.contains(k)) return;
    const std::string tag = "_k" + std::to_string(k);
    if (spec.emit.fields) write_field_csv((dir / ("field" + tag + ".csv")).string(), slice);
    const Contour contour = extract_contour(slice, front_level);
    if (spec.emit.contours) {
      write_contour_csv((dir / ("contour" + tag + ".csv")).string(), contour);
      write_contour_svg((dir / ("contour" + tag + ".svg")).string(), contour, cfg.domain);
    }
    if (std::any_of(contour.polylines.begin(), contour.polylines.end(), is_closed)) {
      result.steps.push_back(k);
      result.times.push_back(t);
      result.metrics.push_back(contour_metrics(contour));
    }
  };

  if (spec.benchmark == BenchmarkKind::Circle) {
    result.errors = track_errors(cfg, family, spec.eval_box, on_slice);
    if (spec.emit.errors) write_error_csv((dir / "errors.csv").string(), result.errors);
  } else {
    solve_backward(cfg, family.initial, on_slice);
  }
  if (spec.emit.contours && !result.metrics.empty()) {
    write_metrics_csv((dir / "contour_metrics.csv").string(), result);
  }
  return result;
}

int cmd_solve(const ExperimentSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const SolveResult r = run_experiment(spec, err);
    out << std::setprecision(10);
    if (spec.benchmark == BenchmarkKind::Circle) {
      out << "sup_linf=" << r.errors.sup_linf << " sup_l1=" << r.errors.sup_l1 << '\n';
    }
    for (std::size_t n = 0; n < r.metrics.size(); ++n) {
      const ContourMetrics& m = r.metrics[n];
      out << "k=" << r.steps[n] << " t=" << r.times[n] << " mean_radius=" << m.mean_radius
          << " radius_ratio=" << m.max_radius / m.min_radius << '\n';
    }
    return kSuccess;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "runtime fault: " << e.what() << '\n';
    return kRuntimeFault;
  }
}

TablePlan table_plan(int id, const std::vector<Setting>& overrides, const ExperimentSpec& base) {
  TablePlan plan{id, "", "", {}};
  ExperimentSpec common = base;
  common.benchmark = BenchmarkKind::Circle;
  common.radius = 1.0;
  common.emit = EmitFlags{false, false, false};
  GameConfig& g = common.game;
  g.epsilon = 0.08;
  g.gamma = 0.7;
  g.alpha = ScaleAlpha{0.9};
  g.h = 0.01;
  g.l0 = 160;
  g.controls = CellCount{160};
  g.horizon = 0.12;

  std::vector<std::pair<std::string, std::string>> sweep;  // (label value, setting value)
  switch (id) {
    case 1:
      plan.title = "Error for epsilon=0.08 and gamma=0.7";
      plan.sweep_key = "scale";
      g.controls = StepSize{0.01};
      sweep = {{"0.1", "0.1"}, {"0.3", "0.3"}, {"0.9", "0.9"}};
      break;
    case 2:
      plan.title = "Influence of h, epsilon=0.08, gamma=0.7, scale=0.9, l0=160, r0=160";
      plan.sweep_key = "h";
      sweep = {{"0.16", "0.16"}, {"0.08", "0.08"}, {"0.04", "0.04"}, {"0.02", "0.02"}};
      break;
    case 3:
      plan.title = "Influence of r0, epsilon=0.08, gamma=0.7, scale=0.9, h=0.01, l0=160";
      plan.sweep_key = "r0";
      sweep = {{"10", "10"}, {"20", "20"}, {"40", "40"}, {"80", "80"}, {"160", "160"}};
      break;
    case 4:
      plan.title = "Influence of l0, epsilon=0.08, gamma=0.7, scale=0.9, h=0.01, r0=160";
      plan.sweep_key = "l0";
      sweep = {{"10", "10"}, {"20", "20"}, {"40", "40"}, {"80", "80"}, {"160", "160"}};
      break;
    case 5:
      plan.title = "Convergence in epsilon for gamma=0.8";
      plan.sweep_key = "epsilon";
      g.gamma = 0.8;
      g.controls = CellCount{100};
      g.l0 = 360;
      sweep = {{"0.09", "0.09"}, {"0.08", "0.08"}, {"0.05", "0.05"}, {"0.04", "0.04"}, {"0.02", "0.02"}};
      break;
    case 6:
      plan.title = "Convergence in epsilon for gamma=0.9";
      plan.sweep_key = "epsilon";
      g.gamma = 0.9;
      g.controls = CellCount{80};
      g.l0 = 300;
      sweep = {{"0.08", "0.08"}, {"0.04", "0.04"}, {"0.02", "0.02"}};
      break;
    default:
      throw ConfigError("table id must be 1..6, got " + std::to_string(id));
  }

  apply_settings(common, overrides);
  for (const auto& [label, value] : sweep) {
    ExperimentSpec row = common;
    apply_setting(row, plan.sweep_key, value);
    plan.rows.push_back({plan.sweep_key + "=" + label, std::move(row)});
  }
  return plan;
}

int cmd_table(int id, const std::vector<Setting>& overrides, const ExperimentSpec& base,
              std::ostream& out, std::ostream& err) {
  try {
    const TablePlan plan = table_plan(id, overrides, base);
    std::vector<ErrorReport> reports;
    for (const TableRow& row : plan.rows) {
      err << "running " << row.label << '\n';
      reports.push_back(run_experiment(row.spec, err).errors);
    }

    out << "Table " << id << ": " << plan.title << '\n';
    std::ostringstream csv;
    csv << std::setprecision(17);
    if (id == 1) {
      out << std::left << std::setw(14) << "";
      csv << "metric";
      for (const TableRow& row : plan.rows) {
        out << std::setw(14) << row.label;
        csv << ',' << row.label;
      }
      out << '\n' << std::setw(14) << "l_inf-error";
      csv << "\nl_inf-error";
      for (const ErrorReport& r : reports) {
        out << std::setw(14) << num(r.sup_linf, 4);
        csv << ',' << r.sup_linf;
      }
      out << '\n' << std::setw(14) << "l1-error";
      csv << "\nl1-error";
      for (const ErrorReport& r : reports) {
        out << std::setw(14) << num(r.sup_l1, 4);
        csv << ',' << r.sup_l1;
      }
      out << '\n';
      csv << '\n';
    } else {
      const bool wide = id == 5 || id == 6;
      out << std::left << std::setw(16) << "" << std::setw(14) << "l_inf-error" << std::setw(14)
          << "l1-error";
      csv << plan.sweep_key << ",linf,l1";
      if (wide) {
        out << std::setw(8) << "h" << std::setw(8) << "r0" << std::setw(8) << "l0";
        csv << ",h,r0,l0";
      }
      out << '\n';
      csv << '\n';
      for (std::size_t n = 0; n < plan.rows.size(); ++n) {
        const GameConfig& g = plan.rows[n].spec.game;
        const std::string value = plan.rows[n].label.substr(plan.sweep_key.size() + 1);
        out << std::setw(16) << plan.rows[n].label << std::setw(14) << num(reports[n].sup_linf, 4)
            << std::setw(14) << num(reports[n].sup_l1, 4);
        csv << value << ',' << reports[n].sup_linf << ',' << reports[n].sup_l1;
        if (wide) {
          const auto* c = std::get_if<CellCount>(&g.controls);
          const std::string r0 = c ? std::to_string(c->r0) : "ds=" + num(std::get<StepSize>(g.controls).ds);
          out << std::setw(8) << num(g.h) << std::setw(8) << r0 << std::setw(8) << g.l0;
          csv << ',' << g.h << ',' << r0 << ',' << g.l0;
        }
        out << '\n';
        csv << '\n';
      }
    }

    const std::filesystem::path dir(plan.rows.front().spec.out_dir);
    std::filesystem::create_directories(dir);
    const std::string path = (dir / ("table" + std::to_string(id) + ".csv")).string();
    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path + " for writing");
    file << csv.str();
    return kSuccess;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "runtime fault: " << e.what() << '\n';
    return kRuntimeFault;
  }
}

}  // namespace ppcf::cli
