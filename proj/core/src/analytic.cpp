#include "ppcf/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace ppcf {

CircleBenchmark::CircleBenchmark(double gamma, double r0) : gamma_(gamma), r0_(r0) {
  if (!(r0 > 0.0) || !std::isfinite(r0)) throw std::invalid_argument("R0 must be positive");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be positive");
  t_max_ = std::pow(r0, gamma + 1.0) / (gamma + 1.0);
}

double u0_circle(Vec2 x, const CircleBenchmark& b) {
  const double e = b.gamma() + 1.0;
  const double d = std::max(std::pow(norm(x), e) - std::pow(b.r0(), e), 0.0);
  return d * d;
}

double exact_circle(Vec2 x, double t, const CircleBenchmark& b) {
  if (!(t >= 0.0) || !(t < b.t_max())) {
    throw std::invalid_argument("exact circle solution needs 0 <= t < t_max");
  }
  const double e = b.gamma() + 1.0;
  const double d = std::max(std::pow(norm(x), e) - std::pow(b.r0(), e) + e * t, 0.0);
  return d * d;
}

double exact_circle_radius(double t, double level, const CircleBenchmark& b) {
  if (!(level >= 0.0)) throw std::invalid_argument("circle levels are nonnegative");
  if (!(t >= 0.0) || !(t < b.t_max())) {
    throw std::invalid_argument("exact circle solution needs 0 <= t < t_max");
  }
  const double e = b.gamma() + 1.0;
  const double base = std::pow(b.r0(), e) - e * t + std::sqrt(level);
  return std::pow(base, 1.0 / e);
}

double u0_ellipse(Vec2 x, double gamma) {
  const double q = x.x * x.x + 1.7 * x.y * x.y;
  const double d = std::max(std::pow(q, (gamma + 1.0) / 2.0) - 1.0, 0.0);
  return d * d;
}

ErrorNorms error_norms(const ScalarField& slice, const PlaneFunction& exact,
                       const std::optional<Box>& eval_box) {
  double linf = 0.0;
  double sum = 0.0;
  for (std::size_t j = 0; j < slice.ny(); ++j) {
    for (std::size_t i = 0; i < slice.nx(); ++i) {
      const Vec2 p = slice.node(i, j);
      if (eval_box && !eval_box->contains(p)) continue;
      const double d = std::abs(slice.at(i, j) - exact(p));
      linf = std::max(linf, d);
      sum += d;
    }
  }
  return {linf, slice.h() * slice.h() * sum};
}

ExactFamily circle_family(const CircleBenchmark& b) {
  return ExactFamily{
      InitialDatum{[b](Vec2 x) { return u0_circle(x, b); }, 0.0},
      [b](Vec2 x, double t) { return exact_circle(x, t, b); },
      b.t_max(),
  };
}

ErrorReport track_errors(const GameConfig& cfg, const ExactFamily& family,
                         const std::optional<Box>& eval_box, const StepObserver& on_slice) {
  if (!(cfg.horizon > 0.0) || !(cfg.horizon < family.t_max)) {
    throw std::invalid_argument("horizon must lie in (0, t_max) of the benchmark");
  }
  ErrorReport report;
  solve_backward(cfg, family.initial, [&](std::size_t k, double t, const ScalarField& slice) {
    const auto exact_now = [&](Vec2 x) { return family.exact(x, t); };
    const ErrorNorms e = error_norms(slice, exact_now, eval_box);
    report.per_step.push_back({k, t, e.linf, e.l1});
    report.sup_linf = std::max(report.sup_linf, e.linf);
    report.sup_l1 = std::max(report.sup_l1, e.l1);
    report.realized_horizon = t;
    if (on_slice) on_slice(k, t, slice);
  });
  return report;
}

void write_error_csv(std::ostream& out, const ErrorReport& report) {
  out << "k,t,linf,l1\n" << std::setprecision(17);
  for (const StepError& e : report.per_step) {
    out << e.k << ',' << e.t << ',' << e.linf << ',' << e.l1 << '\n';
  }
  out << "sup,," << report.sup_linf << ',' << report.sup_l1 << '\n';
}

void write_error_csv(const std::string& path, const ErrorReport& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_error_csv(out, report);
}

}  // namespace ppcf
