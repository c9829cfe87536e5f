#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ppcf/gamma.hpp"
#include "ppcf/geometry.hpp"

namespace ppcf {

struct ControlInterval {
  double s_lo;  // eps^alpha1
  double s_hi;  // eps^-alpha2
};

/// [eps^alpha1, eps^-alpha2]; throws unless 0 < epsilon < 1.
ControlInterval control_interval(double epsilon, const AlphaWindow& w);

/// Number of equal cells r0 the interval is split into.
struct CellCount {
  std::size_t r0;
};

/// Target spacing; r0 = ceil(width / ds) and the spacing is recomputed so
/// that both endpoints are hit.
struct StepSize {
  double ds;
};

using ControlSpec = std::variant<CellCount, StepSize>;

/// Equidistant step sizes with their costs precomputed.
class ControlSet {
 public:
  ControlSet(ControlInterval interval, std::size_t r0, const GammaParams& p);

  const std::vector<double>& s_values() const { return s_values_; }
  const std::vector<double>& f_values() const { return f_values_; }
  double s_lo() const { return s_values_.front(); }
  double s_hi() const { return s_values_.back(); }
  std::size_t cells() const { return s_values_.size() - 1; }
  std::size_t size() const { return s_values_.size(); }

 private:
  std::vector<double> s_values_;
  std::vector<double> f_values_;
};

ControlSet discretize_controls(double epsilon, const AlphaWindow& w, const GammaParams& p,
                               const ControlSpec& spec);

/// Unit vectors at angles 2 pi l / l0, l = 0 .. l0-1, with their
/// counterclockwise perpendiculars. For even l0 the antipodal entries are
/// stored as exact negations, so directions[l + l0/2] == -directions[l]
/// bit for bit.
class DirectionSet {
 public:
  explicit DirectionSet(std::size_t l0);

  const std::vector<Vec2>& directions() const { return directions_; }
  const std::vector<Vec2>& perps() const { return perps_; }
  std::size_t size() const { return directions_.size(); }

 private:
  std::vector<Vec2> directions_;
  std::vector<Vec2> perps_;
};

inline DirectionSet direction_set(std::size_t l0) { return DirectionSet(l0); }

}  // namespace ppcf
