#include "doctest.h"

#include <cmath>
#include <sstream>

#include "helpers.hpp"
#include "pfcurv/embedding.hpp"

using namespace pfcurv;
using testutil::kPi;

TEST_SUITE_BEGIN("embedding");

TEST_CASE("icosahedron hinge angles hit the closed form") {
  const EmbeddedSurface es = testutil::unit_icosahedron();
  const HingeField f = hinge_angles_euclidean(es);
  const double want = testutil::icosahedron_hinge_angle();
  for (int e = 0; e < es.surface.edge_count(); ++e) {
    REQUIRE(f.is_valid(e));
    CHECK(f.angle[e] == doctest::Approx(want).epsilon(1e-12));
  }
  const HingeStats st = hinge_angle_stats(f);
  CHECK(st.count == 30);
  CHECK(st.mean_abs_deg == doctest::Approx(-want * 180 / kPi).epsilon(1e-12));
  CHECK(st.max_abs_deg == doctest::Approx(st.mean_abs_deg).epsilon(1e-12));
}

TEST_CASE("concave fold is positive") {
  // V-shaped fold opening toward +z; both normals gain a +z component, so
  // the surface is concave toward the side they point to.
  std::vector<Vec3> pos = {{0, 0, 0}, {1, 0, 0}, {0.5, 1, 1}, {0.5, -1, 1}};
  std::vector<TriangleSpec> tris = {{0, 1, 2}, {1, 0, 3}};
  const EmbeddedSurface es = embed_points(pos, tris);
  const HingeField f = hinge_angles_euclidean(es);
  const int h = *es.surface.find_edge(0, 1);
  CHECK(f.angle[h] == doctest::Approx(kPi / 2).epsilon(1e-14));
}

TEST_CASE("orientation flip negates every hinge angle") {
  const EmbeddedSurface es = testutil::unit_icosahedron();
  std::vector<TriangleSpec> flipped;
  for (const auto& t : es.surface.triangles()) {
    flipped.push_back({t.v[0], t.v[2], t.v[1]});
  }
  const EmbeddedSurface fs = embed_points(es.positions, flipped);
  const HingeField f0 = hinge_angles_euclidean(es);
  const HingeField f1 = hinge_angles_euclidean(fs);
  for (int e = 0; e < es.surface.edge_count(); ++e) {
    // The derived edge order is identical (sorted pairs).
    CHECK(f1.angle[e] == doctest::Approx(-f0.angle[e]).epsilon(1e-13));
  }
}

TEST_CASE("hinge angles are rigid-motion invariant") {
  const EmbeddedSurface es = testutil::unit_icosahedron();
  const double c = std::cos(0.37), s = std::sin(0.37);
  Mat3 rot;
  rot << c, -s, 0, s, c, 0, 0, 0, 1;
  Mat3 tilt;
  const double c2 = std::cos(1.1), s2 = std::sin(1.1);
  tilt << 1, 0, 0, 0, c2, -s2, 0, s2, c2;
  rot = tilt * rot;
  std::vector<Vec3> moved;
  for (const Vec3& p : es.positions) moved.push_back(rot * p + Vec3(3.0, -2.0, 0.5));
  std::vector<TriangleSpec> tris;
  for (const auto& t : es.surface.triangles()) tris.push_back({t.v[0], t.v[1], t.v[2]});
  const EmbeddedSurface ms = embed_points(moved, tris);
  const HingeField f0 = hinge_angles_euclidean(es);
  const HingeField f1 = hinge_angles_euclidean(ms);
  for (int e = 0; e < es.surface.edge_count(); ++e) {
    CHECK(f1.angle[e] == doctest::Approx(f0.angle[e]).epsilon(1e-10));
  }
}

TEST_CASE("planar grids are exactly flat inside") {
  const EmbeddedSurface es = testutil::flat_grid(5, 4, 0.7);
  const HingeField f = hinge_angles_euclidean(es);
  int interior = 0;
  for (int e = 0; e < es.surface.edge_count(); ++e) {
    if (!f.is_valid(e)) continue;
    CHECK(f.angle[e] == 0.0);
    ++interior;
  }
  CHECK(interior > 0);
}

TEST_CASE("antiparallel normals raise DegenerateHinge") {
  std::vector<Vec3> pos = {{0, 0, 0}, {1, 0, 0}, {0.5, 1, 0}, {0.5, 0.9, 0}};
  std::vector<TriangleSpec> tris = {{0, 1, 2}, {1, 0, 3}};
  const EmbeddedSurface es = embed_points(pos, tris);
  CHECK_THROWS_AS(hinge_angles_euclidean(es), DegenerateHinge);
}

TEST_CASE("embed_on cross-checks intrinsic lengths against chords") {
  const EmbeddedSurface es = testutil::unit_icosahedron();
  CHECK_NOTHROW(embed_on(es.surface, es.positions));
  std::vector<Vec3> bad = es.positions;
  bad[0] *= 1.001;
  CHECK_THROWS_AS(embed_on(es.surface, bad), InvalidInput);
}

TEST_CASE("OFF round trip preserves geometry") {
  const EmbeddedSurface es = testutil::unit_icosahedron();
  std::ostringstream out;
  write_off(es, out);
  std::istringstream in(out.str());
  const EmbeddedSurface rs = read_off(in);
  REQUIRE(rs.surface.vertex_count() == es.surface.vertex_count());
  REQUIRE(rs.surface.triangle_count() == es.surface.triangle_count());
  for (int v = 0; v < es.surface.vertex_count(); ++v) {
    CHECK((rs.positions[v] - es.positions[v]).norm() == 0.0);
  }
}

TEST_SUITE_END();
