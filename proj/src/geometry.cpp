#include "exagt/geometry.hpp"

#include <algorithm>
#include <limits>

namespace exagt {

double wrap_angle(double rad) {
  double a = std::fmod(rad, 2.0 * M_PI);
  if (a <= -M_PI) a += 2.0 * M_PI;
  if (a > M_PI) a -= 2.0 * M_PI;
  return a;
}

Aabb bounding_box(const Polygon& poly) {
  Aabb box;
  box.min_x = box.min_y = std::numeric_limits<double>::infinity();
  box.max_x = box.max_y = -std::numeric_limits<double>::infinity();
  for (const Vec2& v : poly) {
    box.min_x = std::min(box.min_x, v.x);
    box.min_y = std::min(box.min_y, v.y);
    box.max_x = std::max(box.max_x, v.x);
    box.max_y = std::max(box.max_y, v.y);
  }
  return box;
}

bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const Vec2 ap = p - a;
  if (ab.cross(ap) != 0.0) return false;
  const double t = ap.dot(ab);
  return t >= 0.0 && t <= ab.dot(ab);
}

bool point_in_polygon(const Vec2& p, const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (point_on_segment(p, poly[j], poly[i])) return true;
  }
  // Even-odd ray crossing, ray toward +x. The half-open vertex rule
  // (yi <= p.y < yj or yj <= p.y < yi) counts each vertex exactly once.
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = poly[j];
    const Vec2& b = poly[i];
    if ((a.y <= p.y) != (b.y <= p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

namespace {

int orientation(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double v = (b - a).cross(c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

}  // namespace

bool segments_intersect(const Vec2& a1, const Vec2& a2, const Vec2& b1, const Vec2& b2) {
  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && point_on_segment(b1, a1, a2)) return true;
  if (o2 == 0 && point_on_segment(b2, a1, a2)) return true;
  if (o3 == 0 && point_on_segment(a1, b1, b2)) return true;
  if (o4 == 0 && point_on_segment(a2, b1, b2)) return true;
  return false;
}

bool polygon_is_simple(const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % n];
    if (a.x == b.x && a.y == b.y) return false;  // degenerate edge
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& a1 = poly[i];
    const Vec2& a2 = poly[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vec2& b1 = poly[j];
      const Vec2& b2 = poly[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Shared endpoint is fine; anything more means a collinear fold-back.
        const Vec2 shared = (j == i + 1) ? a2 : a1;
        const Vec2 tip_a = (j == i + 1) ? a1 : a2;
        const Vec2 tip_b = (j == i + 1) ? b2 : b1;
        if (orientation(shared, tip_a, tip_b) == 0 && (tip_a - shared).dot(tip_b - shared) > 0.0) {
          return false;
        }
        continue;
      }
      if (segments_intersect(a1, a2, b1, b2)) return false;
    }
  }
  return true;
}

}  // namespace exagt
