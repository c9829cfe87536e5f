#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "ppcf/controls.hpp"
#include "ppcf/field.hpp"
#include "ppcf/gamma.hpp"
#include "ppcf/solver.hpp"

namespace ppcf::cli {

namespace {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

// Deterministic pseudo-random numbers in [0, 1) from integer coordinates.
double hash01(double a, double b, double c) {
  const double v = std::sin(12.9898 * a + 78.233 * b + 37.719 * c) * 43758.5453;
  return v - std::floor(v);
}

ScalarField test_field(std::size_t n, double h, int seed) {
  std::vector<double> values(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      values[j * n + i] = hash01(static_cast<double>(i), static_cast<double>(j), seed) * 2.0 - 1.0;
    }
  }
  return ScalarField({-0.5 * h * static_cast<double>(n - 1), -0.5 * h * static_cast<double>(n - 1)},
                     h, n, n, std::move(values));
}

// Straightforward transcription of the interpolation rule.
double reference_sample(const ScalarField& u, Vec2 p, const OutsidePolicy& policy) {
  const Box& hull = u.hull();
  const bool inside = p.x >= hull.lo.x && p.x <= hull.hi.x && p.y >= hull.lo.y && p.y <= hull.hi.y;
  if (!inside) {
    if (policy.kind() == OutsidePolicy::Kind::AnalyticInitial) return policy.function()(p);
    p.x = std::min(std::max(p.x, hull.lo.x), hull.hi.x);
    p.y = std::min(std::max(p.y, hull.lo.y), hull.hi.y);
  }
  double fx = (p.x - u.origin().x) * u.inv_h();
  double fy = (p.y - u.origin().y) * u.inv_h();
  for (double* f : {&fx, &fy}) {
    const double r = static_cast<double>(static_cast<long long>(*f + 0.5));
    if (std::abs(*f - r) < ScalarField::kSnapTolerance) *f = r;
  }
  const std::size_t i = std::min(static_cast<std::size_t>(fx), u.nx() - 2);
  const std::size_t j = std::min(static_cast<std::size_t>(fy), u.ny() - 2);
  const double tx = fx - static_cast<double>(i);
  const double ty = fy - static_cast<double>(j);
  const double lower = (1.0 - tx) * u.at(i, j) + tx * u.at(i + 1, j);
  const double upper = (1.0 - tx) * u.at(i, j + 1) + tx * u.at(i + 1, j + 1);
  return (1.0 - ty) * lower + ty * upper;
}

ScalarField reference_step(const ScalarField& u, const std::vector<double>& s_values,
                           const GammaParams& p, std::size_t l0, double eps,
                           const OutsidePolicy& policy) {
  const DirectionSet dirs(l0);
  ScalarField out = ScalarField::like(u);
  auto values = out.values_mut();
  for (std::size_t j = 0; j < u.ny(); ++j) {
    for (std::size_t i = 0; i < u.nx(); ++i) {
      const Vec2 x = u.node(i, j);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t l = 0; l < dirs.size(); ++l) {
        const Vec2 v = dirs.directions()[l];
        const Vec2 w = dirs.perps()[l];
        for (double s : s_values) {
          const double f = f_cost(s, p);
          double worst = -std::numeric_limits<double>::infinity();
          for (double b : {-1.0, 1.0}) {
            for (double beta : {-1.0, 1.0}) {
              const double ax = (eps * s) * v.x;
              const double ay = (eps * s) * v.y;
              const double nx = (eps * eps * f) * w.x;
              const double ny = (eps * eps * f) * w.y;
              const Vec2 z{(x.x + b * ax) + beta * nx, (x.y + b * ay) + beta * ny};
              worst = std::max(worst, reference_sample(u, z, policy));
            }
          }
          best = std::min(best, worst);
        }
      }
      values[j * u.nx() + i] = best;
    }
  }
  return out;
}

Check sup_representation(const SelfcheckOptions& options) {
  double worst = 0.0;
  for (double gamma : {0.4, 0.5, 0.7, 0.9}) {
    const GammaParams p(gamma);
    const GammaParams probe = p.with_perturbed_cost(options.cost_perturbation);
    for (int k = 0; k < 20; ++k) {
      const double kappa = -0.01 * std::pow(1000.0, k / 19.0);
      const double center = s_maximizer(kappa, p);
      constexpr int kPoints = 100000;
      double sup = -std::numeric_limits<double>::infinity();
      for (int n = 0; n < kPoints; ++n) {
        const double s = center * std::pow(10.0, -2.0 + 4.0 * n / (kPoints - 1));
        sup = std::max(sup, phi_s(kappa, s, probe));
      }
      worst = std::max(worst, std::abs(sup - phi(kappa, p)));
    }
  }
  std::ostringstream detail;
  detail << "max deviation " << worst;
  return {"sup-representation", worst <= 1e-6, detail.str()};
}

Check stationarity() {
  double worst = 0.0;
  for (double gamma : {0.4, 0.5, 0.7, 0.9}) {
    const GammaParams p(gamma);
    for (int k = 0; k < 50; ++k) {
      const double kappa = -0.01 * std::pow(1000.0, k / 49.0);
      const double s = s_maximizer(kappa, p);
      const double step = 1e-6 * s;
      const double d = (phi_s(kappa, s + step, p) - phi_s(kappa, s - step, p)) / (2.0 * step);
      worst = std::max(worst, std::abs(d));
    }
  }
  std::ostringstream detail;
  detail << "max |d/ds phi_s| " << worst;
  return {"maximizer-stationarity", worst < 1e-4, detail.str()};
}

Check oracle_equivalence() {
  int mismatches = 0;
  int cases = 0;
  const GammaParams p(0.7);
  const AlphaWindow w = alphas_from_scale(p, 0.9);
  for (int seed = 0; seed < 12; ++seed) {
    const std::size_t n = 5 + static_cast<std::size_t>(seed % 5);
    const std::size_t l0 = 4 + static_cast<std::size_t>(seed % 5);
    const std::size_t r0 = 1 + static_cast<std::size_t>(seed % 4);
    const double eps = 0.2 + 0.05 * (seed % 3);
    const ControlSet cs = discretize_controls(eps, w, p, CellCount{r0});
    const DirectionSet ds(l0);
    const OutsidePolicy policy = seed % 2 == 0
                                     ? OutsidePolicy::clamp_nearest()
                                     : OutsidePolicy::analytic([](Vec2 x) { return x.x * x.x - x.y; });
    ScalarField fast = test_field(n, 0.1, seed);
    ScalarField slow = fast;
    for (int k = 0; k < 3; ++k) {
      fast = game_step(fast, cs, ds, eps, policy, 1);
      slow = reference_step(slow, cs.s_values(), p, l0, eps, policy);
      ++cases;
      if (!std::equal(fast.values().begin(), fast.values().end(), slow.values().begin())) {
        ++mismatches;
      }
    }
  }
  std::ostringstream detail;
  detail << mismatches << " of " << cases << " steps differ";
  return {"brute-force-oracle", mismatches == 0, detail.str()};
}

Check operator_properties() {
  const GammaParams p(0.7);
  const AlphaWindow w = alphas_from_scale(p, 0.5);
  const double eps = 0.25;
  const ControlSet cs = discretize_controls(eps, w, p, CellCount{3});
  const DirectionSet ds(8);
  const OutsidePolicy clamp = OutsidePolicy::clamp_nearest();
  bool monotone = true;
  double shift_error = 0.0;
  for (int seed = 0; seed < 10; ++seed) {
    const ScalarField u = test_field(9, 0.1, 100 + seed);
    std::vector<double> bumped(u.values().begin(), u.values().end());
    std::vector<double> shifted = bumped;
    for (std::size_t n = 0; n < bumped.size(); ++n) {
      bumped[n] += hash01(static_cast<double>(n), 1.0, seed) * 0.3;
      shifted[n] += 0.75;
    }
    const ScalarField v(u.origin(), u.h(), u.nx(), u.ny(), std::move(bumped));
    const ScalarField uc(u.origin(), u.h(), u.nx(), u.ny(), std::move(shifted));
    const ScalarField gu = game_step(u, cs, ds, eps, clamp, 1);
    const ScalarField gv = game_step(v, cs, ds, eps, clamp, 1);
    const ScalarField guc = game_step(uc, cs, ds, eps, clamp, 1);
    for (std::size_t n = 0; n < gu.size(); ++n) {
      monotone = monotone && gu.values()[n] <= gv.values()[n];
      shift_error = std::max(shift_error, std::abs(guc.values()[n] - gu.values()[n] - 0.75));
    }
  }
  std::ostringstream detail;
  detail << "monotone=" << (monotone ? "yes" : "no") << " shift error " << shift_error;
  return {"monotonicity-and-shift", monotone && shift_error <= 1e-12, detail.str()};
}

}  // namespace

int cmd_selfcheck(const SelfcheckOptions& options, std::ostream& out) {
  const std::vector<Check> checks{sup_representation(options), stationarity(), oracle_equivalence(),
                                  operator_properties()};
  bool all = true;
  for (const Check& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    all = all && c.passed;
  }
  return all ? kSuccess : kSelfcheckFailed;
}

}  // namespace ppcf::cli
