#include "ppcf/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

namespace ppcf {

std::size_t time_step_count(double horizon, double epsilon) {
  if (!(horizon > 0.0) || !(epsilon > 0.0)) return 0;
  return static_cast<std::size_t>(std::floor(horizon / (epsilon * epsilon) + 1e-9));
}

namespace {

AlphaWindow resolve_alphas(const GammaParams& p, const AlphaSpec& spec) {
  if (const auto* s = std::get_if<ScaleAlpha>(&spec)) return alphas_from_scale(p, s->scale);
  const auto& e = std::get<ExplicitAlpha>(spec);
  return alpha_window(p, e.alpha1, e.alpha2);
}

}  // namespace

GameSetup prepare(const GameConfig& cfg) {
  GammaParams params(cfg.gamma);
  AlphaWindow window = resolve_alphas(params, cfg.alpha);
  ControlSet controls = discretize_controls(cfg.epsilon, window, params, cfg.controls);
  DirectionSet directions(cfg.l0);
  if (!(cfg.h > 0.0) || !std::isfinite(cfg.h)) throw std::invalid_argument("h must be positive");
  if (!(cfg.domain.width() >= cfg.h) || !(cfg.domain.height() >= cfg.h)) {
    throw std::invalid_argument("domain is smaller than one grid cell");
  }
  if (!std::isfinite(cfg.contour_level)) throw std::invalid_argument("contour level must be finite");
  const std::size_t steps = time_step_count(cfg.horizon, cfg.epsilon);
  if (steps == 0) {
    throw std::invalid_argument("horizon is shorter than one time step epsilon^2");
  }
  return GameSetup{params, window, std::move(controls), std::move(directions), steps};
}

std::vector<std::string> validate_scaling(const GameConfig& cfg) {
  std::vector<std::string> warnings;
  const GammaParams params(cfg.gamma);
  const AlphaWindow window = resolve_alphas(params, cfg.alpha);
  const ControlInterval interval = control_interval(cfg.epsilon, window);

  const double h_limit = std::pow(cfg.epsilon, 4.0 / 3.0);
  if (cfg.h >= h_limit) {
    std::ostringstream msg;
    msg << "h = " << cfg.h << " is not below epsilon^(4/3) = " << h_limit
        << "; grid cells are coarser than the control footprint";
    warnings.push_back(msg.str());
  }

  const double along = cfg.epsilon * interval.s_hi;
  const double jump = cfg.epsilon * cfg.epsilon * f_cost(interval.s_lo, params);
  const double reach = std::max(along, jump);
  const double half_width = 0.5 * std::min(cfg.domain.width(), cfg.domain.height());
  if (reach > 0.1 * half_width) {
    std::ostringstream msg;
    msg << "maximal displacement per step " << reach << " exceeds 10% of the domain half-width "
        << half_width << "; the outside policy influences the solution";
    warnings.push_back(msg.str());
  }
  return warnings;
}

namespace {

struct Offset {
  Vec2 along;   // eps s v
  Vec2 normal;  // eps^2 f(s) v_perp
};

// Precomputed displacement table for one step. When the direction set is
// closed under exact negation only half of it is scanned: v and -v produce
// the same four points bit for bit.
class StepKernel {
 public:
  StepKernel(const ScalarField& next, const ControlSet& controls, const DirectionSet& directions,
             double epsilon, const OutsidePolicy& policy)
      : next_(next), policy_(policy), hull_(next.hull()), n_s_(controls.size()) {
    const auto& dirs = directions.directions();
    const auto& perps = directions.perps();
    std::size_t active = dirs.size();
    if (active % 2 == 0) {
      const std::size_t half = active / 2;
      bool antipodal = true;
      for (std::size_t l = 0; l < half && antipodal; ++l) {
        antipodal = dirs[l + half].x == -dirs[l].x && dirs[l + half].y == -dirs[l].y &&
                    perps[l + half].x == -perps[l].x && perps[l + half].y == -perps[l].y;
      }
      if (antipodal) active = half;
    }
    n_dirs_ = active;
    dirs_.assign(dirs.begin(), dirs.begin() + static_cast<std::ptrdiff_t>(active));
    perps_.assign(perps.begin(), perps.begin() + static_cast<std::ptrdiff_t>(active));
    offsets_.resize(n_dirs_ * n_s_);
    for (std::size_t d = 0; d < n_dirs_; ++d) {
      for (std::size_t r = 0; r < n_s_; ++r) {
        const double step = epsilon * controls.s_values()[r];
        const double jump = epsilon * epsilon * controls.f_values()[r];
        offsets_[d * n_s_ + r] = Offset{{step * dirs_[d].x, step * dirs_[d].y},
                                        {jump * perps_[d].x, jump * perps_[d].y}};
      }
    }
    floor_ = next.min_value();
    if (policy.kind() == OutsidePolicy::Kind::AnalyticInitial) {
      floor_ = std::min(floor_, policy.lower_bound());
    }
  }

  // Fills rows [row_begin, row_end) of `out`.
  void run_rows(std::span<double> out, std::size_t row_begin, std::size_t row_end) {
    const std::size_t nx = next_.nx();
    for (std::size_t j = row_begin; j < row_end; ++j) {
      std::size_t hint = kNoHint;
      for (std::size_t i = 0; i < nx; ++i) {
        out[j * nx + i] = solve_node(i, j, hint);
        if (faulted_) return;
      }
    }
  }

  bool faulted() const { return faulted_; }
  const std::string& fault_message() const { return fault_message_; }

 private:
  static constexpr std::size_t kNoHint = std::numeric_limits<std::size_t>::max();

  double sample(Vec2 p) {
    if (p.x >= hull_.lo.x && p.x <= hull_.hi.x && p.y >= hull_.lo.y && p.y <= hull_.hi.y) {
      return next_.interpolate(p);
    }
    if (policy_.kind() == OutsidePolicy::Kind::AnalyticInitial) {
      const double v = policy_.function()(p);
      if (!std::isfinite(v)) fault(p);
      return v;
    }
    return next_.interpolate({std::clamp(p.x, hull_.lo.x, hull_.hi.x),
                              std::clamp(p.y, hull_.lo.y, hull_.hi.y)});
  }

  void fault(Vec2 p) {
    if (faulted_) return;
    faulted_ = true;
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-finite outside sample at (" << p.x << ", " << p.y << ")";
    fault_message_ = msg.str();
  }

  // Max of the four outcomes of control (d, r), abandoned as soon as it
  // reaches `bound`; the returned value is then only a lower bound >= bound.
  double outcome(Vec2 x, std::size_t d, std::size_t r, double b0, double beta0, double bound) {
    const Offset& o = offsets_[d * n_s_ + r];
    const Vec2 a{b0 * o.along.x, b0 * o.along.y};
    const Vec2 n{beta0 * o.normal.x, beta0 * o.normal.y};
    double m = sample({(x.x + a.x) + n.x, (x.y + a.y) + n.y});
    if (m >= bound) return m;
    m = std::max(m, sample({(x.x - a.x) + n.x, (x.y - a.y) + n.y}));
    if (m >= bound) return m;
    m = std::max(m, sample({(x.x + a.x) - n.x, (x.y + a.y) - n.y}));
    if (m >= bound) return m;
    return std::max(m, sample({(x.x - a.x) - n.x, (x.y - a.y) - n.y}));
  }

  Vec2 gradient(std::size_t i, std::size_t j) const {
    const std::size_t nx = next_.nx();
    const std::size_t ny = next_.ny();
    const std::size_t il = i > 0 ? i - 1 : i;
    const std::size_t ir = i + 1 < nx ? i + 1 : i;
    const std::size_t jl = j > 0 ? j - 1 : j;
    const std::size_t jr = j + 1 < ny ? j + 1 : j;
    return {next_.at(ir, j) - next_.at(il, j), next_.at(i, jr) - next_.at(i, jl)};
  }

  double solve_node(std::size_t i, std::size_t j, std::size_t& hint) {
    const Vec2 x = next_.node(i, j);
    const Vec2 g = gradient(i, j);
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_index = kNoHint;

    // The sign pair evaluated first is the one the local gradient favours;
    // this only affects how quickly losing controls are abandoned.
    auto orient = [&](std::size_t d, double& b0, double& beta0) {
      b0 = dot(g, dirs_[d]) >= 0.0 ? 1.0 : -1.0;
      beta0 = dot(g, perps_[d]) >= 0.0 ? 1.0 : -1.0;
    };

    if (hint != kNoHint) {
      const std::size_t d = hint / n_s_;
      double b0, beta0;
      orient(d, b0, beta0);
      best = outcome(x, d, hint % n_s_, b0, beta0, best);
      best_index = hint;
    }
    if (best > floor_) {
      for (std::size_t d = 0; d < n_dirs_; ++d) {
        double b0, beta0;
        orient(d, b0, beta0);
        for (std::size_t r = 0; r < n_s_; ++r) {
          const double m = outcome(x, d, r, b0, beta0, best);
          if (m < best) {
            best = m;
            best_index = d * n_s_ + r;
            if (best <= floor_) goto done;
          }
        }
      }
    }
  done:
    hint = best_index;
    if (!std::isfinite(best)) fault(x);
    return best;
  }

  const ScalarField& next_;
  const OutsidePolicy& policy_;
  Box hull_;
  std::size_t n_s_;
  std::size_t n_dirs_ = 0;
  std::vector<Vec2> dirs_;
  std::vector<Vec2> perps_;
  std::vector<Offset> offsets_;
  double floor_;
  bool faulted_ = false;
  std::string fault_message_;
};

unsigned resolve_threads(unsigned requested, std::size_t rows) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, rows));
}

}  // namespace

void game_step_into(const ScalarField& next, ScalarField& out, const ControlSet& controls,
                    const DirectionSet& directions, double epsilon, const OutsidePolicy& policy,
                    unsigned threads) {
  if (out.nx() != next.nx() || out.ny() != next.ny() || out.h() != next.h() ||
      !(out.origin() == next.origin())) {
    throw std::invalid_argument("output slice must share the grid of the input slice");
  }
  const std::size_t ny = next.ny();
  const unsigned workers = resolve_threads(threads, ny);
  std::span<double> values = out.values_mut();

  std::vector<StepKernel> kernels;
  kernels.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    kernels.emplace_back(next, controls, directions, epsilon, policy);
  }

  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    const std::size_t begin = ny * w / workers;
    const std::size_t end = ny * (w + 1) / workers;
    try {
      kernels[w].run_rows(values, begin, end);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }

  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& k : kernels) {
    if (k.faulted()) throw SolverFault(k.fault_message());
  }
}

ScalarField game_step(const ScalarField& next, const ControlSet& controls,
                      const DirectionSet& directions, double epsilon, const OutsidePolicy& policy,
                      unsigned threads) {
  ScalarField out = ScalarField::like(next);
  game_step_into(next, out, controls, directions, epsilon, policy, threads);
  return out;
}

ScalarField solve_backward(const GameConfig& cfg, const InitialDatum& u0,
                           const StepObserver& observer) {
  const GameSetup setup = prepare(cfg);
  const OutsidePolicy policy = cfg.outside == OutsideKind::Analytic
                                   ? OutsidePolicy::analytic(u0.fn, u0.lower_bound)
                                   : OutsidePolicy::clamp_nearest();
  ScalarField current = from_function(u0.fn, cfg.domain, cfg.h);
  ScalarField scratch = ScalarField::like(current);
  const double dt = cfg.epsilon * cfg.epsilon;
  if (observer) observer(0, 0.0, current);
  for (std::size_t k = 1; k <= setup.steps; ++k) {
    game_step_into(current, scratch, setup.controls, setup.directions, cfg.epsilon, policy,
                   cfg.threads);
    std::swap(current, scratch);
    if (observer) observer(k, static_cast<double>(k) * dt, current);
  }
  return current;
}

}  // namespace ppcf
