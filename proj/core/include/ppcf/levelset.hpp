#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ppcf/field.hpp"
#include "ppcf/geometry.hpp"

namespace ppcf {

using Polyline = std::vector<Vec2>;

/// Level set of a field as chains of points on grid-cell edges. Closed chains
/// repeat their first vertex at the end.
struct Contour {
  std::vector<Polyline> polylines;
  double level = 0.0;
};

bool is_closed(const Polyline& line);

/// Marching squares with linear interpolation along cell edges. A node is on
/// the high side when its value is >= level; saddle cells are resolved by
/// the average of the four corners (>= level joins the high side).
Contour extract_contour(const ScalarField& field, double level);

struct ContourMetrics {
  double mean_radius;
  double min_radius;
  double max_radius;
  double enclosed_area;
  Vec2 centroid;
};

/// Metrics of the longest closed polyline; radii measured from its area
/// centroid. Throws std::invalid_argument if no polyline is closed.
ContourMetrics contour_metrics(const Contour& c);

double polyline_area(const Polyline& line);
double polyline_length(const Polyline& line);

/// "polyline_id,x,y" rows.
void write_contour_csv(std::ostream& out, const Contour& c);
void write_contour_csv(const std::string& path, const Contour& c);

/// One <path> per polyline, viewBox equal to `box`, y pointing up.
void write_contour_svg(std::ostream& out, const Contour& c, const Box& box);
void write_contour_svg(const std::string& path, const Contour& c, const Box& box);

}  // namespace ppcf
