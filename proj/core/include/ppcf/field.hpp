#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ppcf/geometry.hpp"

namespace ppcf {

using PlaneFunction = std::function<double(Vec2)>;

/// Values on the nodes origin + (i h, j h), 0 <= i < nx, 0 <= j < ny,
/// stored row-major (x fastest). All entries are finite.
class ScalarField {
 public:
  ScalarField(Vec2 origin, double h, std::size_t nx, std::size_t ny, std::vector<double> values);

  /// Same grid, every value set to `fill`.
  static ScalarField like(const ScalarField& grid, double fill = 0.0);

  Vec2 origin() const { return origin_; }
  double h() const { return h_; }
  double inv_h() const { return inv_h_; }
  std::size_t nx() const { return nx_; }
  std::size_t ny() const { return ny_; }
  std::size_t size() const { return values_.size(); }

  Vec2 node(std::size_t i, std::size_t j) const {
    return {origin_.x + static_cast<double>(i) * h_, origin_.y + static_cast<double>(j) * h_};
  }
  double at(std::size_t i, std::size_t j) const { return values_[j * nx_ + i]; }
  std::span<const double> values() const { return values_; }
  /// Writable view for solvers filling a fresh slice; entries must stay finite.
  std::span<double> values_mut() { return values_; }

  /// Closed box spanned by the nodes.
  const Box& hull() const { return hull_; }

  double min_value() const;
  double max_value() const;

  /// Bilinear interpolant at a point inside hull(). Index coordinates within
  /// 1e-9 of an integer are snapped to it, so node positions reproduce the
  /// stored value exactly.
  double interpolate(Vec2 p) const {
    double fx = (p.x - origin_.x) * inv_h_;
    double fy = (p.y - origin_.y) * inv_h_;
    fx = snap(fx);
    fy = snap(fy);
    std::size_t i = static_cast<std::size_t>(fx);
    std::size_t j = static_cast<std::size_t>(fy);
    if (i > nx_ - 2) i = nx_ - 2;
    if (j > ny_ - 2) j = ny_ - 2;
    const double tx = fx - static_cast<double>(i);
    const double ty = fy - static_cast<double>(j);
    const double* row = values_.data() + j * nx_ + i;
    const double lower = (1.0 - tx) * row[0] + tx * row[1];
    const double upper = (1.0 - tx) * row[nx_] + tx * row[nx_ + 1];
    return (1.0 - ty) * lower + ty * upper;
  }

  static constexpr double kSnapTolerance = 1e-9;

 private:
  static double snap(double f) {
    const double r = static_cast<double>(static_cast<long long>(f + 0.5));
    const double d = f - r;
    return (d < kSnapTolerance && d > -kSnapTolerance) ? r : f;
  }

  Vec2 origin_;
  double h_;
  double inv_h_;
  std::size_t nx_;
  std::size_t ny_;
  Box hull_;
  std::vector<double> values_;
};

/// How points outside the node hull are sampled.
class OutsidePolicy {
 public:
  enum class Kind { AnalyticInitial, ClampNearest };

  /// Evaluate `fn` at the physical point. `lower_bound` must not exceed any
  /// value `fn` can return; the solver uses it to stop a control search early.
  static OutsidePolicy analytic(PlaneFunction fn,
                                double lower_bound = -std::numeric_limits<double>::infinity());
  /// Project onto the hull and interpolate there.
  static OutsidePolicy clamp_nearest();

  Kind kind() const { return kind_; }
  const PlaneFunction& function() const { return fn_; }
  double lower_bound() const { return lower_bound_; }

 private:
  OutsidePolicy(Kind kind, PlaneFunction fn, double lower_bound)
      : kind_(kind), fn_(std::move(fn)), lower_bound_(lower_bound) {}

  Kind kind_;
  PlaneFunction fn_;
  double lower_bound_;
};

/// Samples `f` on the nodes of `domain` with spacing h:
/// nx = floor(width / h) + 1, ny likewise, origin at domain.lo.
ScalarField from_function(const PlaneFunction& f, const Box& domain, double h);

double sample_bilinear(const ScalarField& field, Vec2 p, const OutsidePolicy& policy);

/// "x,y,value" with one row per node in row-major order, 17 significant digits.
void write_field_csv(std::ostream& out, const ScalarField& field);
void write_field_csv(const std::string& path, const ScalarField& field);

}  // namespace ppcf
