#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "pfcurv/errors.hpp"

namespace pfcurv {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;

inline double clamp_unit(double x) { return std::min(1.0, std::max(-1.0, x)); }

// Interior angle opposite to side c in a triangle with side lengths a, b, c.
inline double angle_opposite(double a, double b, double c) {
  return std::acos(clamp_unit((a * a + b * b - c * c) / (2.0 * a * b)));
}

// Angle at the corner where sides a and b meet (opposite side is c).
inline double angle_between_sides(double a, double b, double c) {
  return angle_opposite(a, b, c);
}

inline double triangle_area(double a, double b, double c) {
  // Kahan's numerically stable form of Heron's formula.
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  const double x = s[2], y = s[1], z = s[0];
  const double t = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return 0.25 * std::sqrt(std::max(0.0, t));
}

// Places a triangle with side lengths |ab|=c_ab, |bc|=c_bc, |ca|=c_ca so that
// a is at the origin, b on the positive x-axis, c in the upper half plane.
struct PlacedTriangle {
  Vec2 a, b, c;
};

inline PlacedTriangle place_triangle(double ab, double bc, double ca) {
  PlacedTriangle p;
  p.a = Vec2(0.0, 0.0);
  p.b = Vec2(ab, 0.0);
  const double x = (ab * ab + ca * ca - bc * bc) / (2.0 * ab);
  const double y2 = ca * ca - x * x;
  p.c = Vec2(x, std::sqrt(std::max(0.0, y2)));
  return p;
}

// Rigid motion of the plane (rotation + translation, optionally a reflection).
struct Isometry2 {
  Mat2 rot = Mat2::Identity();
  Vec2 shift = Vec2::Zero();
  Vec2 operator()(const Vec2& p) const { return rot * p + shift; }
};

// Isometry mapping segment (p0,p1) onto (q0,q1); the segments must have equal
// length. If flip is set the map reflects across the target line.
inline Isometry2 map_segment(const Vec2& p0, const Vec2& p1, const Vec2& q0, const Vec2& q1,
                             bool flip = false) {
  const Vec2 u = (p1 - p0).normalized();
  const Vec2 v = (q1 - q0).normalized();
  Mat2 ru;
  ru << u.x(), u.y(), -u.y(), u.x();  // rotates u to e_x
  if (flip) {
    ru.row(1) *= -1.0;  // reflect across the segment
  }
  Mat2 rv;
  rv << v.x(), -v.y(), v.y(), v.x();  // rotates e_x to v
  Isometry2 iso;
  iso.rot = rv * ru;
  iso.shift = q0 - iso.rot * p0;
  return iso;
}

inline double polygon_area(const std::vector<Vec2>& poly) {
  double s = 0.0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % n];
    s += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * s;
}

// Clips a polygon against the half plane n.p + d >= -tol (Sutherland-Hodgman).
inline std::vector<Vec2> clip_halfplane(const std::vector<Vec2>& poly, const Vec2& n, double d,
                                        double tol) {
  std::vector<Vec2> out;
  const std::size_t m = poly.size();
  if (m == 0) return out;
  out.reserve(m + 2);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& p = poly[i];
    const Vec2& q = poly[(i + 1) % m];
    const double sp = n.dot(p) + d;
    const double sq = n.dot(q) + d;
    const bool in_p = sp >= -tol;
    const bool in_q = sq >= -tol;
    if (in_p) out.push_back(p);
    if (in_p != in_q) {
      const double t = sp / (sp - sq);
      out.push_back(p + t * (q - p));
    }
  }
  return out;
}

// Parameter interval [t0,t1] of the segment p + t(q - p), t in [0,1], inside a
// convex polygon (vertices in either winding). Returns false if the overlap is
// empty. Boundary-lying segments count as inside.
inline bool segment_in_convex(const Vec2& p, const Vec2& q, const std::vector<Vec2>& poly,
                              double tol, double& t0, double& t1) {
  const std::size_t m = poly.size();
  if (m < 3) return false;
  const double orient = polygon_area(poly) >= 0.0 ? 1.0 : -1.0;
  t0 = 0.0;
  t1 = 1.0;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec2& a = poly[i];
    const Vec2& b = poly[(i + 1) % m];
    // Inward half plane: orient * cross(b - a, x - a) >= 0.
    const Vec2 e = b - a;
    const Vec2 n = orient * Vec2(-e.y(), e.x());
    const double sp = n.dot(p - a);
    const double sq = n.dot(q - a);
    const double ds = sq - sp;
    if (std::abs(ds) <= tol * n.norm()) {
      if (sp < -tol * n.norm()) return false;  // parallel and outside
      continue;
    }
    const double t = -sp / ds;
    if (ds > 0.0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 >= t1) return false;
  }
  return t0 < t1;
}

// Total measure of a union of 1-d intervals.
inline double interval_union_length(std::vector<std::pair<double, double>> iv) {
  std::sort(iv.begin(), iv.end());
  double total = 0.0;
  double lo = 0.0, hi = -1.0;
  bool open = false;
  for (const auto& [a, b] : iv) {
    if (!open || a > hi) {
      if (open) total += hi - lo;
      lo = a;
      hi = b;
      open = true;
    } else {
      hi = std::max(hi, b);
    }
  }
  if (open) total += hi - lo;
  return total;
}

}  // namespace pfcurv
