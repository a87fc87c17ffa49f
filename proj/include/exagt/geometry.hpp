#pragma once

#include <cmath>
#include <vector>

namespace exagt {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
};

using Polygon = std::vector<Vec2>;

// Wraps an angle to (-pi, pi].
double wrap_angle(double rad);

inline double deg_to_rad(double deg) { return deg * M_PI / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / M_PI; }

// Rotates p by angle rad about the origin.
inline Vec2 rotate(const Vec2& p, double rad) {
  const double c = std::cos(rad), s = std::sin(rad);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

struct Aabb {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool contains(const Vec2& p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
};

Aabb bounding_box(const Polygon& poly);

// True if p lies on the closed segment [a, b].
bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// Even-odd containment test; points on the boundary count as inside.
bool point_in_polygon(const Vec2& p, const Polygon& poly);

// True if the closed segments [a1,a2] and [b1,b2] share any point.
bool segments_intersect(const Vec2& a1, const Vec2& a2, const Vec2& b1, const Vec2& b2);

// Simplicity check for a closed polygon (last vertex connects to the first):
// no degenerate edges, no crossing between non-adjacent edges and no
// collinear overlap between adjacent ones. O(n^2) over edge pairs.
bool polygon_is_simple(const Polygon& poly);

}  // namespace exagt
