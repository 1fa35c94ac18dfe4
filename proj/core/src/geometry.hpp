#pragma once

#include "ricciforge/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

namespace ricciforge::geom {

inline Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(sub(a, b)); }

// Half the sum of edge cross products; its norm is the area of a planar polygon.
inline Vec3 vector_area(std::span<const Vec3> pts) {
  Vec3 s{0, 0, 0};
  for (std::size_t i = 0; i < pts.size(); ++i) s = add(s, cross(pts[i], pts[(i + 1) % pts.size()]));
  return scale(s, 0.5);
}

// Heron's formula in Kahan's cancellation-free ordering; 0 for degenerate input.
inline double triangle_area(double a, double b, double c) {
  double x[3] = {a, b, c};
  std::sort(x, x + 3, [](double p, double q) { return p > q; });
  const double p = x[0], q = x[1], r = x[2];
  const double t = (p + (q + r)) * (r - (p - q)) * (r + (p - q)) * (p + (q - r));
  return t <= 0.0 ? 0.0 : 0.25 * std::sqrt(t);
}

// Angle between sides a and b of a triangle whose third side is c.
inline double angle_from_sides(double a, double b, double c) {
  const double cosine = (a * a + b * b - c * c) / (2.0 * a * b);
  return std::acos(std::clamp(cosine, -1.0, 1.0));
}

}  // namespace ricciforge::geom
