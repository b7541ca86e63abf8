#include "pfcurv/dual.hpp"

#include <cmath>

namespace pfcurv {

namespace {

Vec2 circumcenter(const std::array<Vec2, 3>& p) {
  const Vec2 &a = p[0], &b = p[1], &c = p[2];
  const double d = 2.0 * (a.x() * (b.y() - c.y()) + b.x() * (c.y() - a.y()) +
                          c.x() * (a.y() - b.y()));
  const double a2 = a.squaredNorm(), b2 = b.squaredNorm(), c2 = c.squaredNorm();
  return Vec2((a2 * (b.y() - c.y()) + b2 * (c.y() - a.y()) + c2 * (a.y() - b.y())) / d,
              (a2 * (c.x() - b.x()) + b2 * (a.x() - c.x()) + c2 * (b.x() - a.x())) / d);
}

// Smallest normalized barycentric coordinate of q in the triangle.
double min_barycentric(const std::array<Vec2, 3>& p, const Vec2& q) {
  const double full = (p[1] - p[0]).x() * (p[2] - p[0]).y() -
                      (p[2] - p[0]).x() * (p[1] - p[0]).y();
  double m = 1.0;
  for (int i = 0; i < 3; ++i) {
    const Vec2& a = p[(i + 1) % 3];
    const Vec2& b = p[(i + 2) % 3];
    const double sub = (b - a).x() * (q - a).y() - (q - a).x() * (b - a).y();
    m = std::min(m, sub / full);
  }
  return m;
}

void drop_degenerate_points(std::vector<Vec2>& poly, double tol) {
  std::vector<Vec2> out;
  out.reserve(poly.size());
  for (const Vec2& p : poly) {
    if (out.empty() || (p - out.back()).norm() > tol) out.push_back(p);
  }
  while (out.size() > 1 && (out.front() - out.back()).norm() <= tol) out.pop_back();
  poly = std::move(out);
}

}  // namespace

bool is_intrinsically_delaunay(const SimplicialSurface& s) {
  for (int t = 0; t < s.triangle_count(); ++t) {
    const auto& tr = s.triangle(t);
    const PlacedTriangle pt = place_triangle(s.length(tr.e[0]), s.length(tr.e[1]),
                                             s.length(tr.e[2]));
    const std::array<Vec2, 3> frame{pt.a, pt.b, pt.c};
    if (min_barycentric(frame, circumcenter(frame)) <= 1e-9) return false;
  }
  return true;
}

DualTessellation build_dual(const SimplicialSurface& s, DualKind kind, bool mixed_fallback) {
  DualTessellation d;
  d.s_ = &s;
  d.kind_ = kind;
  d.mixed_fallback_ = mixed_fallback;
  d.vertex_area_.assign(s.vertex_count(), 0.0);
  d.frags_.resize(s.triangle_count());

  for (int t = 0; t < s.triangle_count(); ++t) {
    const auto& tr = s.triangle(t);
    auto& f = d.frags_[t];
    const PlacedTriangle pt = place_triangle(s.length(tr.e[0]), s.length(tr.e[1]),
                                             s.length(tr.e[2]));
    f.frame = {pt.a, pt.b, pt.c};

    if (kind == DualKind::barycentric) {
      f.center = (f.frame[0] + f.frame[1] + f.frame[2]) / 3.0;
    } else {
      f.center = circumcenter(f.frame);
      if (min_barycentric(f.frame, f.center) <= 1e-9) {
        if (!mixed_fallback) throw NotDelaunay(t);
        // Clamp to the midpoint of the edge opposite the widest corner.
        int wide = 0;
        double best = -1.0;
        for (int i = 0; i < 3; ++i) {
          const double opp = s.length(tr.e[(i + 1) % 3]);
          if (opp > best) {
            best = opp;
            wide = i;
          }
        }
        f.center = 0.5 * (f.frame[(wide + 1) % 3] + f.frame[(wide + 2) % 3]);
        ++d.fallback_count_;
      }
    }

    const std::array<Vec2, 3> mid{0.5 * (f.frame[0] + f.frame[1]),
                                  0.5 * (f.frame[1] + f.frame[2]),
                                  0.5 * (f.frame[2] + f.frame[0])};
    const double tol = 1e-14 * s.length(tr.e[0]);
    for (int i = 0; i < 3; ++i) {
      std::vector<Vec2> poly{f.frame[i], mid[i], f.center, mid[(i + 2) % 3]};
      drop_degenerate_points(poly, tol);
      const double area = polygon_area(poly);
      d.vertex_area_[tr.v[i]] += area;
      f.corner[i] = std::move(poly);
    }
  }
  return d;
}

}  // namespace pfcurv
