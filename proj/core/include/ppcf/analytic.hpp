#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ppcf/field.hpp"
#include "ppcf/geometry.hpp"
#include "ppcf/solver.hpp"

namespace ppcf {

/// Shrinking circle of initial radius R0 under the flow with exponent gamma.
class CircleBenchmark {
 public:
  CircleBenchmark(double gamma, double r0);

  double gamma() const { return gamma_; }
  double r0() const { return r0_; }
  /// Extinction time R0^(gamma+1) / (gamma+1).
  double t_max() const { return t_max_; }

 private:
  double gamma_;
  double r0_;
  double t_max_;
};

/// max(|x|^(gamma+1) - R0^(gamma+1), 0)^2
double u0_circle(Vec2 x, const CircleBenchmark& b);

/// max(|x|^(gamma+1) - R0^(gamma+1) + (gamma+1) t, 0)^2 for 0 <= t < t_max.
double exact_circle(Vec2 x, double t, const CircleBenchmark& b);

/// Radius of the level set {exact_circle(., t) = level}, level >= 0.
double exact_circle_radius(double t, double level, const CircleBenchmark& b);

/// max((x1^2 + 1.7 x2^2)^((gamma+1)/2) - 1, 0)^2
double u0_ellipse(Vec2 x, double gamma);

struct ErrorNorms {
  double linf;
  double l1;  // h^2-scaled
};

/// Max and h^2-weighted sum of |slice - exact| over the nodes of the slice
/// (optionally only those inside `eval_box`), accumulated in row-major order.
ErrorNorms error_norms(const ScalarField& slice, const PlaneFunction& exact,
                       const std::optional<Box>& eval_box = std::nullopt);

struct StepError {
  std::size_t k;
  double t;
  double linf;
  double l1;
};

struct ErrorReport {
  std::vector<StepError> per_step;
  double sup_linf = 0.0;
  double sup_l1 = 0.0;
  double realized_horizon = 0.0;  // K eps^2
};

/// A benchmark with a closed-form solution u(x, t), t the physical time.
struct ExactFamily {
  InitialDatum initial;
  std::function<double(Vec2, double)> exact;
  double t_max;
};

ExactFamily circle_family(const CircleBenchmark& b);

/// Runs the backward solve and measures every slice against exact(., k eps^2).
/// `on_slice` additionally sees each slice (e.g. to dump snapshots).
ErrorReport track_errors(const GameConfig& cfg, const ExactFamily& family,
                         const std::optional<Box>& eval_box = std::nullopt,
                         const StepObserver& on_slice = {});

/// "k,t,linf,l1" rows followed by "sup,,SUP_LINF,SUP_L1".
void write_error_csv(std::ostream& out, const ErrorReport& report);
void write_error_csv(const std::string& path, const ErrorReport& report);

}  // namespace ppcf
