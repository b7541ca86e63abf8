#include "doctest.h"

#include <cmath>
#include <memory>
#include <vector>

#include "helpers.hpp"
#include "pfcurv/errors.hpp"
#include "pfcurv/generators.hpp"
#include "pfcurv/hinge.hpp"
#include "pfcurv/metric.hpp"
#include "pfcurv/smooth.hpp"

using namespace pfcurv;
using testutil::kPi;

TEST_SUITE_BEGIN("generators");

TEST_CASE("ring profile follows the quarter-point rule") {
  const SphereScheme s6 = sphere_scheme(6);  // m = 2
  CHECK(s6.ring_size == std::vector<int>{6, 12, 12, 12, 6});
  CHECK(s6.ring_phase == std::vector<double>{0.0, 0.5, 0.0, 0.5, 0.0});

  const SphereScheme s22 = sphere_scheme(22);  // m = 6
  REQUIRE(s22.ring_size.size() == 21);
  for (int k = 1; k <= 5; ++k) {
    CHECK(s22.ring_size[k - 1] == 6 * k);
    CHECK(s22.ring_size[21 - k] == 6 * k);
  }
  for (int r = 5; r < 16; ++r) CHECK(s22.ring_size[r] == 36);

  for (int bad : {4, 5, 8, 12, 16, 20, 26}) {
    CHECK_THROWS_AS(sphere_scheme(bad), UnsupportedLayerCount);
  }
  CHECK_THROWS_AS(generate_layered_surface("modified-sphere", 12), UnsupportedLayerCount);
  CHECK_THROWS_AS(generate_layered_surface("torus", 6), UnknownSurface);
}

TEST_CASE("sphere triangulations are closed with the expected counts") {
  struct Row {
    int layers, nv, ne, nf;
  };
  // V = 2 + 6 m (layers - m) with m = (layers + 2) / 4, E = 3V - 6, F = 2V - 4.
  const Row rows[] = {{6, 50, 144, 96},
                      {10, 128, 378, 252},
                      {14, 242, 720, 480},
                      {18, 392, 1170, 780},
                      {22, 578, 1728, 1152}};
  for (const char* name : {"modified-sphere", "peanut", "round-sphere"}) {
    for (const Row& r : rows) {
      const GeneratedSurface g = generate_layered_surface(name, r.layers);
      const SimplicialSurface& s = g.embedded.surface;
      CHECK(s.vertex_count() == r.nv);
      CHECK(s.edge_count() == r.ne);
      CHECK(s.triangle_count() == r.nf);
      CHECK(s.euler_characteristic() == 2);
      bool closed = true;
      for (int e = 0; e < s.edge_count(); ++e) closed = closed && s.edge_is_interior(e);
      CHECK(closed);
      CHECK(g.chart_uv.size() == static_cast<std::size_t>(r.nv));
    }
  }
}

TEST_CASE("sphere vertices sit on the smooth surface at their chart points") {
  for (const char* name : {"modified-sphere", "peanut", "round-sphere"}) {
    const GeneratedSurface g = generate_layered_surface(name, 10);
    const SmoothSurface smooth = make_surface(g.smooth_name, g.smooth_param);
    for (std::size_t v = 0; v < g.embedded.positions.size(); ++v) {
      const Vec3 p = smooth.position(g.chart_uv[v]);
      CHECK((p - g.embedded.positions[v]).norm() <= 1e-14 * (1.0 + p.norm()));
    }
  }
  // Colatitudes are uniform: ring i sits at (i + 1) pi / layers.
  const GeneratedSurface g = generate_layered_surface("round-sphere", 6);
  CHECK(g.chart_uv.front() == Vec2(0.0, 0.0));
  CHECK(g.chart_uv.back().x() == doctest::Approx(kPi).epsilon(1e-15));
  for (std::size_t v = 1; v + 1 < g.chart_uv.size(); ++v) {
    const double ratio = g.chart_uv[v].x() * 6.0 / kPi;
    CHECK(std::abs(ratio - std::round(ratio)) <= 1e-12);
  }
}

TEST_CASE("sphere triangles wind counterclockwise seen from outside") {
  const GeneratedSurface g = generate_layered_surface("round-sphere", 10);
  const EmbeddedSurface& es = g.embedded;
  for (int t = 0; t < es.surface.triangle_count(); ++t) {
    const auto& tv = es.surface.triangle(t).v;
    const Vec3 centroid =
        (es.positions[tv[0]] + es.positions[tv[1]] + es.positions[tv[2]]) / 3.0;
    CHECK(es.triangle_normals[t].dot(centroid) > 0.0);
  }
}

TEST_CASE("generation is deterministic") {
  const GeneratedSurface a = generate_layered_surface("peanut", 10);
  const GeneratedSurface b = generate_layered_surface("peanut", 10);
  REQUIRE(a.embedded.positions.size() == b.embedded.positions.size());
  for (std::size_t v = 0; v < a.embedded.positions.size(); ++v) {
    CHECK(a.embedded.positions[v] == b.embedded.positions[v]);
  }
  REQUIRE(a.embedded.surface.triangle_count() == b.embedded.surface.triangle_count());
  for (int t = 0; t < a.embedded.surface.triangle_count(); ++t) {
    CHECK(a.embedded.surface.triangle(t).v == b.embedded.surface.triangle(t).v);
  }
}

TEST_CASE("round sphere pole spokes and first ring are congruent") {
  const GeneratedSurface g = generate_layered_surface("round-sphere", 6);
  const SimplicialSurface& s = g.embedded.surface;
  // North pole is vertex 0 and the first ring is vertices 1..6.
  const double spoke = s.edge(*s.find_edge(0, 1)).length;
  const double ring = s.edge(*s.find_edge(1, 2)).length;
  for (int j = 1; j <= 6; ++j) {
    CHECK(s.edge(*s.find_edge(0, j)).length == doctest::Approx(spoke).epsilon(1e-13));
    CHECK(s.edge(*s.find_edge(j, j % 6 + 1)).length == doctest::Approx(ring).epsilon(1e-13));
  }
}

TEST_CASE("hinge angle statistics track the sphere reference values") {
  struct Row {
    const char* name;
    int layers;
    double mean_deg, max_deg;
  };
  const Row rows[] = {
      {"modified-sphere", 6, 18.0, 32.0}, {"modified-sphere", 10, 11.0, 18.0},
      {"modified-sphere", 14, 8.2, 13.0}, {"modified-sphere", 18, 6.4, 9.8},
      {"modified-sphere", 22, 5.2, 8.1},  {"peanut", 6, 20.0, 37.0},
      {"peanut", 10, 13.0, 24.0},         {"peanut", 14, 9.7, 18.0},
      {"peanut", 18, 7.6, 14.0},          {"peanut", 22, 6.3, 12.0},
  };
  for (const Row& r : rows) {
    const GeneratedSurface g = generate_layered_surface(r.name, r.layers);
    const HingeStats st = hinge_angle_stats(hinge_angles_euclidean(g.embedded));
    CHECK(st.count == g.embedded.surface.edge_count());
    CHECK(st.mean_abs_deg == doctest::Approx(r.mean_deg).epsilon(0.25));
    CHECK(st.max_abs_deg == doctest::Approx(r.max_deg).epsilon(0.25));
  }
}

TEST_CASE("cylinder grid bends only across axial edges") {
  const int around = 16, rows = 6;
  const double radius = 1.0;
  const GeneratedSurface g = generate_cylinder_grid(radius, around, rows);
  const SimplicialSurface& s = g.embedded.surface;
  CHECK(s.vertex_count() == around * (rows + 1));
  CHECK(s.triangle_count() == 2 * around * rows);
  CHECK(s.edge_count() == around * (3 * rows + 1));
  CHECK(s.euler_characteristic() == 0);

  const SmoothSurface smooth = make_surface(g.smooth_name, g.smooth_param);
  for (std::size_t v = 0; v < g.embedded.positions.size(); ++v) {
    CHECK((smooth.position(g.chart_uv[v]) - g.embedded.positions[v]).norm() <= 1e-13);
  }

  const HingeField h = hinge_angles_euclidean(g.embedded);
  int n_axial = 0, n_circ = 0, n_diag = 0, n_boundary = 0;
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& ed = s.edge(e);
    const int dj = ed.v / around - ed.u / around;
    int di = ed.v % around - ed.u % around;
    if (di > around / 2) di -= around;
    if (di < -around / 2) di += around;
    if (!h.valid[e]) {
      ++n_boundary;
      CHECK(dj == 0);  // only the two end rings are boundary
      continue;
    }
    if (dj == 0) {
      ++n_circ;  // within one chord plane: flat
      CHECK(std::abs(h.angle[e]) <= 1e-12);
    } else if (di == 0) {
      ++n_axial;  // adjacent chord planes meet at the full turning angle
      CHECK(h.angle[e] == doctest::Approx(-2.0 * kPi / around).epsilon(1e-12));
    } else {
      ++n_diag;  // quad diagonal: the split quad is planar
      CHECK(std::abs(h.angle[e]) <= 1e-12);
    }
  }
  CHECK(n_boundary == 2 * around);
  CHECK(n_axial == around * rows);
  CHECK(n_circ == around * (rows - 1));
  CHECK(n_diag == around * rows);

  CHECK_THROWS_AS(generate_cylinder_grid(0.0, 16, 6), InvalidInput);
  CHECK_THROWS_AS(generate_cylinder_grid(1.0, 2, 6), InvalidInput);
}

TEST_CASE("tilted plane grid quotients to a simplicial torus") {
  auto metric = std::make_shared<GowdyMetric>(0.1);
  for (GridKind kind : {GridKind::rectangular, GridKind::skew}) {
    GeodesicSolver solver(metric);
    const GowdyGrid g = generate_gowdy_grid(kind, 6, solver);
    const SimplicialSurface& s = g.sampling.surf;
    CHECK(s.vertex_count() == 18);
    CHECK(s.edge_count() == 54);
    CHECK(s.triangle_count() == 36);
    CHECK(s.euler_characteristic() == 0);
    for (int e = 0; e < s.edge_count(); ++e) CHECK(s.edge_is_interior(e));

    int type_count[3] = {0, 0, 0};
    for (int t : g.edge_type) ++type_count[t];
    CHECK(type_count[0] == 18);
    CHECK(type_count[1] == 18);
    CHECK(type_count[2] == 18);

    // One z-period: blocks steps of step_b climb z by 2 pi.
    CHECK(g.blocks * g.step_b.z() == doctest::Approx(2.0 * kPi).epsilon(1e-15));

    // Chart coordinates express every vertex in the rectangular step frame.
    const Vec3 va(0.0, 1.0, 0.0), vb_rect(-1.0 / 3.0, 0.0, kPi / 3.0);
    const SmoothSurface plane = make_surface("gowdy-plane");
    for (int v = 0; v < s.vertex_count(); ++v) {
      const Vec3 q = g.chart_uv[v].x() * va + g.chart_uv[v].y() * vb_rect;
      CHECK((q - g.sampling.position[v]).norm() <= 1e-12);
      CHECK((plane.position(g.chart_uv[v]) - g.sampling.position[v]).norm() <= 1e-12);
    }

    // Normals are g-unit, g-orthogonal to the plane, and point toward +x.
    const Vec3 vb = g.step_b / g.spacing;
    for (int v = 0; v < s.vertex_count(); ++v) {
      const Vec3 n = g.sampling.normal[v];
      const Mat3 G = metric->metric(g.sampling.position[v]);
      CHECK(n.dot(G * n) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(n.dot(G * va)) <= 1e-12);
      CHECK(std::abs(n.dot(G * vb)) <= 1e-12);
      CHECK(n.x() > 0.0);
    }

    // Homogeneity in the transverse direction: a row's edge lengths repeat
    // across columns, so the congruence cache solves one edge per row and type.
    CHECK(solver.cache_misses() == 3 * g.blocks);
    for (int i = 0; i < g.blocks; ++i) {
      for (int t = 0; t < 3; ++t) {
        const double len0 = s.edge(3 * (i * g.columns) + t).length;
        for (int j = 1; j < g.columns; ++j) {
          CHECK(s.edge(3 * (i * g.columns + j) + t).length == len0);
        }
      }
    }
  }
  GeodesicSolver solver(metric);
  CHECK_THROWS_AS(generate_gowdy_grid(GridKind::rectangular, 2, solver), InvalidInput);
  CHECK_THROWS_AS(generate_gowdy_grid(GridKind::rectangular, 6, solver, 2), InvalidInput);
}

TEST_CASE("skew grid shears the rectangular grid within the same plane") {
  auto metric = std::make_shared<GowdyMetric>(0.1);
  GeodesicSolver solver(metric);
  const GowdyGrid r = generate_gowdy_grid(GridKind::rectangular, 6, solver);
  const GowdyGrid s = generate_gowdy_grid(GridKind::skew, 6, solver);
  const Vec3 va = r.step_a / r.spacing;
  CHECK((s.step_b - (r.step_b - 2.0 / 9.0 * va) * (s.spacing / r.spacing)).norm() <= 1e-15);
  // Same plane: both step pairs span a plane with the same normal direction.
  const Vec3 nr = r.step_a.cross(r.step_b).normalized();
  const Vec3 ns = s.step_a.cross(s.step_b).normalized();
  CHECK((nr - ns).norm() <= 1e-14);
}

TEST_SUITE_END();
