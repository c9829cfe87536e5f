#pragma once

// Reference implementation of one backward game step used by the tests.
// Deliberately naive: every direction of the set, every step size, all four
// sign pairs, costs recomputed with f_cost, no pruning.

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ppcf/controls.hpp"
#include "ppcf/field.hpp"
#include "ppcf/gamma.hpp"

namespace ppcf::testing {

inline double oracle_sample(const ScalarField& u, Vec2 p, const OutsidePolicy& policy) {
  const double x0 = u.origin().x;
  const double y0 = u.origin().y;
  const double x1 = x0 + static_cast<double>(u.nx() - 1) * u.h();
  const double y1 = y0 + static_cast<double>(u.ny() - 1) * u.h();
  if (p.x < x0 || p.x > x1 || p.y < y0 || p.y > y1) {
    if (policy.kind() == OutsidePolicy::Kind::AnalyticInitial) return policy.function()(p);
    p = {std::clamp(p.x, x0, x1), std::clamp(p.y, y0, y1)};
  }
  auto index = [&](double offset) {
    double f = offset * u.inv_h();
    const double nearest = static_cast<double>(static_cast<long long>(f + 0.5));
    if (std::abs(f - nearest) < 1e-9) f = nearest;
    return f;
  };
  const double fx = index(p.x - x0);
  const double fy = index(p.y - y0);
  const std::size_t i = std::min<std::size_t>(static_cast<std::size_t>(fx), u.nx() - 2);
  const std::size_t j = std::min<std::size_t>(static_cast<std::size_t>(fy), u.ny() - 2);
  const double tx = fx - static_cast<double>(i);
  const double ty = fy - static_cast<double>(j);
  return (1.0 - ty) * ((1.0 - tx) * u.at(i, j) + tx * u.at(i + 1, j)) +
         ty * ((1.0 - tx) * u.at(i, j + 1) + tx * u.at(i + 1, j + 1));
}

inline ScalarField oracle_step(const ScalarField& u, const ControlSet& cs, const DirectionSet& ds,
                               const GammaParams& p, double eps, const OutsidePolicy& policy) {
  std::vector<double> out(u.size());
  for (std::size_t j = 0; j < u.ny(); ++j) {
    for (std::size_t i = 0; i < u.nx(); ++i) {
      const Vec2 x = u.node(i, j);
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t l = 0; l < ds.size(); ++l) {
        for (double s : cs.s_values()) {
          const double f = f_cost(s, p);
          double worst = -std::numeric_limits<double>::infinity();
          for (double b : {1.0, -1.0}) {
            for (double beta : {1.0, -1.0}) {
              const Vec2 along{(eps * s) * ds.directions()[l].x, (eps * s) * ds.directions()[l].y};
              const Vec2 normal{(eps * eps * f) * ds.perps()[l].x, (eps * eps * f) * ds.perps()[l].y};
              const Vec2 z{(x.x + b * along.x) + beta * normal.x, (x.y + b * along.y) + beta * normal.y};
              worst = std::max(worst, oracle_sample(u, z, policy));
            }
          }
          best = std::min(best, worst);
        }
      }
      out[j * u.nx() + i] = best;
    }
  }
  return ScalarField(u.origin(), u.h(), u.nx(), u.ny(), std::move(out));
}

}  // namespace ppcf::testing
