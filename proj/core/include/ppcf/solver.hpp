#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ppcf/controls.hpp"
#include "ppcf/field.hpp"
#include "ppcf/gamma.hpp"
#include "ppcf/geometry.hpp"

namespace ppcf {

/// alpha1 = m1 + scale (m2 - m1), alpha2 = scale m3.
struct ScaleAlpha {
  double scale;
  friend bool operator==(const ScaleAlpha&, const ScaleAlpha&) = default;
};

struct ExplicitAlpha {
  double alpha1;
  double alpha2;
  friend bool operator==(const ExplicitAlpha&, const ExplicitAlpha&) = default;
};

using AlphaSpec = std::variant<ScaleAlpha, ExplicitAlpha>;

enum class OutsideKind { Analytic, Clamp };

/// Everything needed to run the backward game iteration.
struct GameConfig {
  double gamma = 0.7;
  double epsilon = 0.08;  // the game time step is epsilon^2
  AlphaSpec alpha = ScaleAlpha{0.9};
  double h = 0.01;
  std::size_t l0 = 160;
  ControlSpec controls = StepSize{0.01};
  double horizon = 0.12;  // physical time to simulate
  Box domain = Box{{-2.0, -2.0}, {2.0, 2.0}};
  OutsideKind outside = OutsideKind::Analytic;
  // Level of the negated value function -u drawn as the front; the curve is
  // {u = -contour_level}.
  double contour_level = -0.07;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// K = floor(horizon / epsilon^2 + 1e-9).
std::size_t time_step_count(double horizon, double epsilon);

/// The resolved, validated ingredients of a run.
struct GameSetup {
  GammaParams params;
  AlphaWindow window;
  ControlSet controls;
  DirectionSet directions;
  std::size_t steps;
};

/// Validates `cfg` and builds the control sets. Throws std::invalid_argument.
GameSetup prepare(const GameConfig& cfg);

/// Warnings about the relative scaling of h, epsilon and the domain.
std::vector<std::string> validate_scaling(const GameConfig& cfg);

/// Raised when the iteration produces or reads a non-finite value.
class SolverFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One backward step of the game:
///
///   out(x) = min_{v, s} max_{b, beta = +-1} u_next(x + b eps s v + beta eps^2 f(s) v_perp)
///
/// with (v, s) ranging over `directions` x `controls`. Rows of `out` are
/// split among `threads` workers (0 = hardware concurrency); the result does
/// not depend on the split.
void game_step_into(const ScalarField& next, ScalarField& out, const ControlSet& controls,
                    const DirectionSet& directions, double epsilon, const OutsidePolicy& policy,
                    unsigned threads = 0);

ScalarField game_step(const ScalarField& next, const ControlSet& controls,
                      const DirectionSet& directions, double epsilon, const OutsidePolicy& policy,
                      unsigned threads = 0);

/// The terminal datum u(., T) and a lower bound on its values.
struct InitialDatum {
  PlaneFunction fn;
  double lower_bound = -std::numeric_limits<double>::infinity();
};

/// Called with the step index k, the physical time k eps^2 and the slice
/// u^eps(., T - k eps^2).
using StepObserver = std::function<void(std::size_t, double, const ScalarField&)>;

/// Plays the game backwards from u0 for time_step_count(cfg) steps and
/// returns the last slice. The observer sees k = 0 .. K.
ScalarField solve_backward(const GameConfig& cfg, const InitialDatum& u0,
                           const StepObserver& observer = {});

}  // namespace ppcf
