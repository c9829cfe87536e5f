#include "ppcf/field.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace ppcf {

ScalarField::ScalarField(Vec2 origin, double h, std::size_t nx, std::size_t ny,
                         std::vector<double> values)
    : origin_(origin), h_(h), inv_h_(1.0 / h), nx_(nx), ny_(ny), values_(std::move(values)) {
  if (!(h > 0.0) || !std::isfinite(h)) throw std::invalid_argument("grid spacing must be positive");
  if (nx < 2 || ny < 2) throw std::invalid_argument("grid needs at least 2x2 nodes");
  if (values_.size() != nx * ny) throw std::invalid_argument("value count does not match grid");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("field values must be finite");
  }
  hull_ = Box{origin_, node(nx_ - 1, ny_ - 1)};
}

ScalarField ScalarField::like(const ScalarField& grid, double fill) {
  return ScalarField(grid.origin_, grid.h_, grid.nx_, grid.ny_,
                     std::vector<double>(grid.values_.size(), fill));
}

double ScalarField::min_value() const { return *std::min_element(values_.begin(), values_.end()); }
double ScalarField::max_value() const { return *std::max_element(values_.begin(), values_.end()); }

OutsidePolicy OutsidePolicy::analytic(PlaneFunction fn, double lower_bound) {
  if (!fn) throw std::invalid_argument("analytic outside policy needs a function");
  return OutsidePolicy(Kind::AnalyticInitial, std::move(fn), lower_bound);
}

OutsidePolicy OutsidePolicy::clamp_nearest() {
  return OutsidePolicy(Kind::ClampNearest, {}, -std::numeric_limits<double>::infinity());
}

ScalarField from_function(const PlaneFunction& f, const Box& domain, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("grid spacing must be positive");
  // The small slack keeps e.g. 4 / 0.01 from flooring to 399.
  const double cx = std::floor(domain.width() / h + 1e-9);
  const double cy = std::floor(domain.height() / h + 1e-9);
  if (!(cx >= 1.0) || !(cy >= 1.0)) {
    throw std::invalid_argument("domain is smaller than one grid cell");
  }
  const auto nx = static_cast<std::size_t>(cx) + 1;
  const auto ny = static_cast<std::size_t>(cy) + 1;
  std::vector<double> values(nx * ny);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const Vec2 p{domain.lo.x + static_cast<double>(i) * h, domain.lo.y + static_cast<double>(j) * h};
      values[j * nx + i] = f(p);
    }
  }
  return ScalarField(domain.lo, h, nx, ny, std::move(values));
}

double sample_bilinear(const ScalarField& field, Vec2 p, const OutsidePolicy& policy) {
  const Box& hull = field.hull();
  if (hull.contains(p)) return field.interpolate(p);
  if (policy.kind() == OutsidePolicy::Kind::AnalyticInitial) return policy.function()(p);
  const Vec2 q{std::clamp(p.x, hull.lo.x, hull.hi.x), std::clamp(p.y, hull.lo.y, hull.hi.y)};
  return field.interpolate(q);
}

void write_field_csv(std::ostream& out, const ScalarField& field) {
  out << "x,y,value\n" << std::setprecision(17);
  for (std::size_t j = 0; j < field.ny(); ++j) {
    for (std::size_t i = 0; i < field.nx(); ++i) {
      const Vec2 p = field.node(i, j);
      out << p.x << ',' << p.y << ',' << field.at(i, j) << '\n';
    }
  }
}

void write_field_csv(const std::string& path, const ScalarField& field) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_field_csv(out, field);
}

}  // namespace ppcf
