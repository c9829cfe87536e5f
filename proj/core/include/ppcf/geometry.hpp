#pragma once

#include <cmath>
#include <stdexcept>

namespace ppcf {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

/// Counterclockwise quarter turn, (x, y) -> (-y, x).
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

/// Closed axis-aligned rectangle [lo.x, hi.x] x [lo.y, hi.y].
struct Box {
  Vec2 lo;
  Vec2 hi;

  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  bool contains(Vec2 p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
  }
  friend bool operator==(const Box&, const Box&) = default;
};

inline Box make_box(double x0, double y0, double x1, double y1) {
  if (!(x1 > x0) || !(y1 > y0)) {
    throw std::invalid_argument("box must have positive width and height");
  }
  return Box{{x0, y0}, {x1, y1}};
}

}  // namespace ppcf
