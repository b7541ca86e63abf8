#include "doctest.h"

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "pfcurv/dual.hpp"

using namespace pfcurv;

TEST_SUITE_BEGIN("dual");

namespace {

SimplicialSurface one_triangle(double a, double b, double c) {
  std::vector<EdgeSpec> e = {{0, 1, a}, {1, 2, b}, {0, 2, c}};
  std::vector<TriangleSpec> t = {{0, 1, 2}};
  return SimplicialSurface::build(3, e, t);
}

bool point_in_convex(const std::vector<Vec2>& poly, const Vec2& q, double tol) {
  const double orient = polygon_area(poly) >= 0.0 ? 1.0 : -1.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % poly.size()];
    const Vec2 e = b - a;
    if (orient * (e.x() * (q - a).y() - e.y() * (q - a).x()) < -tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("equilateral torus cells are congruent and partition the area") {
  const SimplicialSurface s = testutil::equilateral_torus(3, 4);
  for (const DualKind kind : {DualKind::voronoi, DualKind::barycentric}) {
    const DualTessellation d = build_dual(s, kind);
    const double want = s.total_area() / s.vertex_count();
    double sum = 0.0;
    for (int v = 0; v < s.vertex_count(); ++v) {
      CHECK(d.vertex_area(v) == doctest::Approx(want).epsilon(1e-13));
      sum += d.vertex_area(v);
    }
    CHECK(sum == doctest::Approx(s.total_area()).epsilon(1e-12));
  }
}

TEST_CASE("triangle fragments tile each triangle exactly") {
  const SimplicialSurface s = one_triangle(0.8, 1.1, 0.6);
  for (const DualKind kind : {DualKind::voronoi, DualKind::barycentric}) {
    const DualTessellation d = build_dual(s, kind);
    const auto& f = d.fragments(0);
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double a = polygon_area(f.corner[i]);
      CHECK(a > 0.0);
      sum += a;
    }
    CHECK(sum == doctest::Approx(s.triangle_area(0)).epsilon(1e-12));
    // Midpoint split: each fragment's boundary reaches both edge midpoints.
    for (int i = 0; i < 3; ++i) {
      const Vec2 mid_next = 0.5 * (f.frame[i] + f.frame[(i + 1) % 3]);
      const Vec2 mid_prev = 0.5 * (f.frame[i] + f.frame[(i + 2) % 3]);
      bool has_next = false, has_prev = false;
      for (const Vec2& p : f.corner[i]) {
        if ((p - mid_next).norm() < 1e-14) has_next = true;
        if ((p - mid_prev).norm() < 1e-14) has_prev = true;
      }
      CHECK(has_next);
      CHECK(has_prev);
    }
  }
}

TEST_CASE("edge splits are half lengths for both kinds") {
  const SimplicialSurface s = testutil::equilateral_torus(3, 3);
  for (const DualKind kind : {DualKind::voronoi, DualKind::barycentric}) {
    const DualTessellation d = build_dual(s, kind);
    for (int e = 0; e < s.edge_count(); ++e) {
      const auto split = d.edge_split(e);
      CHECK(split[0] == doctest::Approx(0.5 * s.length(e)).epsilon(1e-15));
      CHECK(split[0] + split[1] == doctest::Approx(s.length(e)).epsilon(1e-15));
    }
  }
}

TEST_CASE("obtuse triangles: strict voronoi rejects, fallback clamps to mixed areas") {
  // Long edge 0-2, so the obtuse corner is vertex 1.
  const SimplicialSurface s = one_triangle(1.0, 1.0, 1.8);
  CHECK_THROWS_AS(build_dual(s, DualKind::voronoi, false), NotDelaunay);

  const DualTessellation d = build_dual(s, DualKind::voronoi, true);
  CHECK(d.fallback_count() == 1);
  const auto& f = d.fragments(0);
  const double area = s.triangle_area(0);
  // Clamping the center to the midpoint of the long edge gives the obtuse
  // corner half the triangle and each acute corner a quarter.
  CHECK(polygon_area(f.corner[1]) == doctest::Approx(area / 2).epsilon(1e-12));
  CHECK(polygon_area(f.corner[0]) == doctest::Approx(area / 4).epsilon(1e-12));
  CHECK(polygon_area(f.corner[2]) == doctest::Approx(area / 4).epsilon(1e-12));
}

TEST_CASE("right triangles count as not Delaunay") {
  const SimplicialSurface s = one_triangle(3.0, 4.0, 5.0);
  CHECK_THROWS_AS(build_dual(s, DualKind::voronoi, false), NotDelaunay);
  CHECK(!is_intrinsically_delaunay(s));
  CHECK(is_intrinsically_delaunay(one_triangle(0.9, 1.0, 1.1)));
}

TEST_CASE("voronoi fragments are nearest-vertex regions inside a triangle") {
  const SimplicialSurface s = one_triangle(0.9, 1.0, 1.1);
  const DualTessellation d = build_dual(s, DualKind::voronoi, false);
  const auto& f = d.fragments(0);

  std::mt19937 rng(7);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  int tested = 0;
  while (tested < 200) {
    double l0 = uni(rng), l1 = uni(rng);
    if (l0 + l1 > 1.0) {
      l0 = 1.0 - l0;
      l1 = 1.0 - l1;
    }
    const Vec2 q = f.frame[0] + l0 * (f.frame[1] - f.frame[0]) + l1 * (f.frame[2] - f.frame[0]);
    int owner = -1;
    for (int i = 0; i < 3; ++i) {
      if (point_in_convex(f.corner[i], q, 1e-12)) {
        owner = i;
        break;
      }
    }
    if (owner < 0) continue;  // on a cell boundary
    for (int i = 0; i < 3; ++i) {
      CHECK((q - f.frame[owner]).norm() <= (q - f.frame[i]).norm() + 1e-9);
    }
    ++tested;
  }
}

TEST_SUITE_END();
