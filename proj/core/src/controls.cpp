#include "ppcf/controls.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ppcf {

ControlInterval control_interval(double epsilon, const AlphaWindow& w) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  return {std::pow(epsilon, w.alpha1), std::pow(epsilon, -w.alpha2)};
}

ControlSet::ControlSet(ControlInterval interval, std::size_t r0, const GammaParams& p) {
  if (r0 == 0) throw std::invalid_argument("control grid needs r0 >= 1");
  if (!(interval.s_lo > 0.0) || !(interval.s_hi > interval.s_lo)) {
    throw std::invalid_argument("control interval must satisfy 0 < s_lo < s_hi");
  }
  const double ds = (interval.s_hi - interval.s_lo) / static_cast<double>(r0);
  s_values_.reserve(r0 + 1);
  for (std::size_t r = 0; r < r0; ++r) {
    s_values_.push_back(interval.s_lo + static_cast<double>(r) * ds);
  }
  s_values_.push_back(interval.s_hi);
  f_values_.reserve(s_values_.size());
  for (double s : s_values_) f_values_.push_back(f_cost(s, p));
}

ControlSet discretize_controls(double epsilon, const AlphaWindow& w, const GammaParams& p,
                               const ControlSpec& spec) {
  const ControlInterval interval = control_interval(epsilon, w);
  const double width = interval.s_hi - interval.s_lo;
  std::size_t r0 = 0;
  if (const auto* count = std::get_if<CellCount>(&spec)) {
    r0 = count->r0;
  } else {
    const double ds = std::get<StepSize>(spec).ds;
    if (!(ds > 0.0) || !(ds < width)) {
      throw std::invalid_argument("control step must satisfy 0 < ds < s_hi - s_lo");
    }
    r0 = static_cast<std::size_t>(std::ceil(width / ds));
  }
  return ControlSet(interval, r0, p);
}

DirectionSet::DirectionSet(std::size_t l0) {
  if (l0 < 3) throw std::invalid_argument("direction set needs l0 >= 3");
  directions_.resize(l0);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(l0);
  auto at = [step](std::size_t l) {
    const double a = step * static_cast<double>(l);
    return Vec2{std::cos(a), std::sin(a)};
  };
  // Exact rotation/negation closure where the index set allows it.
  if (l0 % 4 == 0) {
    const std::size_t q = l0 / 4;
    for (std::size_t l = 0; l < q; ++l) {
      directions_[l] = at(l);
      for (std::size_t k = 1; k < 4; ++k) directions_[l + k * q] = perp(directions_[l + (k - 1) * q]);
    }
  } else if (l0 % 2 == 0) {
    const std::size_t half = l0 / 2;
    for (std::size_t l = 0; l < half; ++l) {
      directions_[l] = at(l);
      directions_[l + half] = Vec2{-directions_[l].x, -directions_[l].y};
    }
  } else {
    for (std::size_t l = 0; l < l0; ++l) directions_[l] = at(l);
  }
  perps_.reserve(l0);
  for (const Vec2& v : directions_) perps_.push_back(perp(v));
}

}  // namespace ppcf
