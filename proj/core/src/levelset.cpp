#include "ppcf/levelset.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ppcf {

bool is_closed(const Polyline& line) { return line.size() >= 3 && line.front() == line.back(); }

namespace {

constexpr int kNone = -1;

class Tracer {
 public:
  Tracer(const ScalarField& field, double level)
      : field_(field),
        level_(level),
        nx_(field.nx()),
        ny_(field.ny()),
        h_edges_((nx_ - 1) * ny_),
        vertex_of_edge_(h_edges_ + nx_ * (ny_ - 1), kNone) {}

  Contour run() {
    for (std::size_t j = 0; j + 1 < ny_; ++j) {
      for (std::size_t i = 0; i + 1 < nx_; ++i) cell(i, j);
    }
    return chain();
  }

 private:
  // Edge ids: bottom/top edges of cells are horizontal, left/right vertical.
  std::size_t horizontal(std::size_t i, std::size_t j) const { return j * (nx_ - 1) + i; }
  std::size_t vertical(std::size_t i, std::size_t j) const { return h_edges_ + j * nx_ + i; }

  int vertex(std::size_t edge, std::size_t ia, std::size_t ja, std::size_t ib, std::size_t jb) {
    int& slot = vertex_of_edge_[edge];
    if (slot != kNone) return slot;
    const double a = field_.at(ia, ja);
    const double b = field_.at(ib, jb);
    const double t = (level_ - a) / (b - a);
    const Vec2 pa = field_.node(ia, ja);
    const Vec2 pb = field_.node(ib, jb);
    points_.push_back({pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)});
    links_.push_back({kNone, kNone});
    slot = static_cast<int>(points_.size() - 1);
    return slot;
  }

  void segment(int a, int b) {
    const int id = static_cast<int>(segments_.size());
    segments_.push_back({a, b});
    for (int v : {a, b}) {
      auto& l = links_[static_cast<std::size_t>(v)];
      (l[0] == kNone ? l[0] : l[1]) = id;
    }
  }

  void cell(std::size_t i, std::size_t j) {
    const double v0 = field_.at(i, j);
    const double v1 = field_.at(i + 1, j);
    const double v2 = field_.at(i + 1, j + 1);
    const double v3 = field_.at(i, j + 1);
    const int code = (v0 >= level_ ? 1 : 0) | (v1 >= level_ ? 2 : 0) | (v2 >= level_ ? 4 : 0) |
                     (v3 >= level_ ? 8 : 0);
    if (code == 0 || code == 15) return;

    auto bottom = [&] { return vertex(horizontal(i, j), i, j, i + 1, j); };
    auto right = [&] { return vertex(vertical(i + 1, j), i + 1, j, i + 1, j + 1); };
    auto top = [&] { return vertex(horizontal(i, j + 1), i, j + 1, i + 1, j + 1); };
    auto left = [&] { return vertex(vertical(i, j), i, j, i, j + 1); };

    switch (code) {
      case 1: case 14: segment(left(), bottom()); break;
      case 2: case 13: segment(bottom(), right()); break;
      case 3: case 12: segment(left(), right()); break;
      case 4: case 11: segment(right(), top()); break;
      case 6: case 9: segment(bottom(), top()); break;
      case 7: case 8: segment(left(), top()); break;
      case 5:
      case 10: {
        const bool center_high = (v0 + v1 + v2 + v3) / 4.0 >= level_;
        // Cut off the two corners that are not joined through the center.
        const bool cut_0_and_2 = (code == 5) != center_high;
        if (cut_0_and_2) {
          segment(left(), bottom());
          segment(right(), top());
        } else {
          segment(bottom(), right());
          segment(left(), top());
        }
        break;
      }
      default: break;
    }
  }

  int other_end(int seg, int v) const {
    const auto& s = segments_[static_cast<std::size_t>(seg)];
    return s[0] == v ? s[1] : s[0];
  }

  Polyline walk(int start, int first_seg) {
    Polyline line{points_[static_cast<std::size_t>(start)]};
    int v = start;
    int seg = first_seg;
    while (seg != kNone && !used_[static_cast<std::size_t>(seg)]) {
      used_[static_cast<std::size_t>(seg)] = true;
      v = other_end(seg, v);
      line.push_back(points_[static_cast<std::size_t>(v)]);
      const auto& l = links_[static_cast<std::size_t>(v)];
      seg = l[0] == seg ? l[1] : l[0];
    }
    return line;
  }

  Contour chain() {
    Contour out;
    out.level = level_;
    used_.assign(segments_.size(), false);
    // Open chains start at vertices with a single segment (grid border).
    for (std::size_t v = 0; v < points_.size(); ++v) {
      const auto& l = links_[v];
      if (l[1] == kNone && l[0] != kNone && !used_[static_cast<std::size_t>(l[0])]) {
        out.polylines.push_back(walk(static_cast<int>(v), l[0]));
      }
    }
    for (std::size_t s = 0; s < segments_.size(); ++s) {
      if (used_[s]) continue;
      out.polylines.push_back(walk(segments_[s][0], static_cast<int>(s)));
    }
    return out;
  }

  const ScalarField& field_;
  double level_;
  std::size_t nx_;
  std::size_t ny_;
  std::size_t h_edges_;
  std::vector<int> vertex_of_edge_;
  std::vector<Vec2> points_;
  std::vector<std::array<int, 2>> links_;
  std::vector<std::array<int, 2>> segments_;
  std::vector<bool> used_;
};

}  // namespace

Contour extract_contour(const ScalarField& field, double level) {
  if (!std::isfinite(level)) throw std::invalid_argument("contour level must be finite");
  return Tracer(field, level).run();
}

double polyline_area(const Polyline& line) {
  double twice = 0.0;
  for (std::size_t k = 0; k + 1 < line.size(); ++k) {
    twice += line[k].x * line[k + 1].y - line[k + 1].x * line[k].y;
  }
  return std::abs(twice) / 2.0;
}

double polyline_length(const Polyline& line) {
  double length = 0.0;
  for (std::size_t k = 0; k + 1 < line.size(); ++k) length += norm(line[k + 1] - line[k]);
  return length;
}

ContourMetrics contour_metrics(const Contour& c) {
  const Polyline* longest = nullptr;
  double longest_length = -1.0;
  for (const Polyline& line : c.polylines) {
    if (!is_closed(line)) continue;
    const double len = polyline_length(line);
    if (len > longest_length) {
      longest_length = len;
      longest = &line;
    }
  }
  if (longest == nullptr) throw std::invalid_argument("contour has no closed polyline");
  const Polyline& line = *longest;

  double twice_signed = 0.0;
  double cx = 0.0;
  double cy = 0.0;
  for (std::size_t k = 0; k + 1 < line.size(); ++k) {
    const double cross = line[k].x * line[k + 1].y - line[k + 1].x * line[k].y;
    twice_signed += cross;
    cx += (line[k].x + line[k + 1].x) * cross;
    cy += (line[k].y + line[k + 1].y) * cross;
  }
  Vec2 centroid{cx / (3.0 * twice_signed), cy / (3.0 * twice_signed)};
  if (twice_signed == 0.0) centroid = line.front();

  ContourMetrics m{0.0, std::numeric_limits<double>::infinity(), 0.0,
                   std::abs(twice_signed) / 2.0, centroid};
  const std::size_t n = line.size() - 1;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = norm(line[k] - centroid);
    m.mean_radius += r;
    m.min_radius = std::min(m.min_radius, r);
    m.max_radius = std::max(m.max_radius, r);
  }
  m.mean_radius /= static_cast<double>(n);
  return m;
}

void write_contour_csv(std::ostream& out, const Contour& c) {
  out << "polyline_id,x,y\n" << std::setprecision(17);
  for (std::size_t id = 0; id < c.polylines.size(); ++id) {
    for (const Vec2& p : c.polylines[id]) out << id << ',' << p.x << ',' << p.y << '\n';
  }
}

void write_contour_csv(const std::string& path, const Contour& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_contour_csv(out, c);
}

void write_contour_svg(std::ostream& out, const Contour& c, const Box& box) {
  out << std::setprecision(10);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << box.lo.x << ' ' << box.lo.y << ' '
      << box.width() << ' ' << box.height() << "\">\n";
  // Mirror y inside the box so that up is up.
  const double flip = box.lo.y + box.hi.y;
  for (const Polyline& line : c.polylines) {
    if (line.empty()) continue;
    out << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"0.01\" d=\"";
    for (std::size_t k = 0; k < line.size(); ++k) {
      out << (k == 0 ? "M" : " L") << line[k].x << ',' << flip - line[k].y;
    }
    if (is_closed(line)) out << " Z";
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

void write_contour_svg(const std::string& path, const Contour& c, const Box& box) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_contour_svg(out, c, box);
}

}  // namespace ppcf
