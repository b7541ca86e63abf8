#include "doctest.h"

#include <cmath>
#include <memory>
#include <vector>

#include "helpers.hpp"
#include "pfcurv/errors.hpp"
#include "pfcurv/generators.hpp"
#include "pfcurv/hinge.hpp"
#include "pfcurv/layers.hpp"
#include "pfcurv/metric.hpp"

using namespace pfcurv;
using testutil::kPi;

TEST_SUITE_BEGIN("layers");

namespace {

GeodesicSolver euclidean_solver() {
  return GeodesicSolver(std::make_shared<EuclideanMetric>());
}

double max_angle_difference(const HingeField& a, const HingeField& b) {
  double worst = 0.0;
  for (std::size_t e = 0; e < a.angle.size(); ++e) {
    REQUIRE(a.valid[e] == b.valid[e]);
    if (a.valid[e]) worst = std::max(worst, std::abs(a.angle[e] - b.angle[e]));
  }
  return worst;
}

}  // namespace

TEST_CASE("dihedral from lengths matches the regular tetrahedron") {
  std::array<std::array<double, 4>, 4> len{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) len[a][b] = (a == b) ? 0.0 : 1.0;
  }
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if (a == b) continue;
      CHECK(tet_dihedral(len, a, b) == doctest::Approx(std::acos(1.0 / 3.0)).epsilon(1e-14));
    }
  }

  // Four collinear points leave no dihedral to measure.
  std::array<std::array<double, 4>, 4> flat{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) flat[a][b] = std::abs(a - b);
  }
  CHECK_THROWS_AS(tet_dihedral(flat, 0, 1), DegenerateTetrahedron);
}

TEST_CASE("slab over a flat grid is a stack of exact prisms") {
  const EmbeddedSurface es = testutil::flat_grid(4, 4, 1.0);
  const SurfaceSampling s = sampling_from_embedded(es);
  GeodesicSolver solver = euclidean_solver();
  const LayerPair lp = build_layers(solver, s);

  CHECK(lp.plus.side == 1);
  CHECK(lp.minus.side == -1);
  CHECK(lp.plus.delta == doctest::Approx(0.5 * es.surface.mean_edge_length()).epsilon(1e-15));
  // Three tets per prism for each of the two mirrored tilings.
  CHECK(lp.plus.tets.size() == 6 * static_cast<std::size_t>(es.surface.triangle_count()));

  // Every tet carries one vertical edge whose length is exactly the offset.
  for (const LayeredComplex* side : {&lp.plus, &lp.minus}) {
    for (const LayerTet& t : side->tets) {
      int verticals = 0;
      for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
          if (t.vertex_tag[a] == ~t.vertex_tag[b] || t.vertex_tag[b] == ~t.vertex_tag[a]) {
            ++verticals;
            CHECK(t.len[a][b] == doctest::Approx(side->delta).epsilon(1e-12));
          }
          CHECK(t.len[a][b] == t.len[b][a]);
        }
      }
      CHECK(verticals == 1);
    }
  }

  // Per tiling, a surface edge appears in its triangle's first tet, plus the
  // second tet when it is the high-id pair; interior edges collect from both
  // flanking prisms, and every count doubles across the two tilings. The
  // wedge weights of each tiling must total one tiling's worth.
  const HingeField h = hinge_angles_from_layers(es.surface, lp.plus, lp.minus);
  CHECK(h.source == HingeField::Source::layered_metric);
  for (int e = 0; e < es.surface.edge_count(); ++e) {
    const auto& ets = lp.plus.edge_tets[e];
    double total_weight = 0.0;
    for (const EdgeInTet& et : ets) total_weight += et.weight;
    CHECK(total_weight == doctest::Approx(0.5 * ets.size()).epsilon(1e-15));
    if (es.surface.edge_is_interior(e)) {
      CHECK(ets.size() >= 4);
      CHECK(ets.size() <= 8);
      CHECK(h.valid[e]);
      CHECK(std::abs(h.angle[e]) <= 1e-12);  // flat surface: no bending
    } else {
      CHECK(ets.size() >= 2);
      CHECK(!h.valid[e]);
      CHECK(std::isnan(h.angle[e]));
    }
  }
}

TEST_CASE("layer angles equal normal-based angles in flat ambient space") {
  // The two slabs tile a neighbourhood of each hinge: their wedge angles sum
  // to 2 pi, so the half-difference reproduces the dihedral bending exactly,
  // whatever offset directions the sampling carries.
  {
    const GeneratedSurface g = generate_layered_surface("modified-sphere", 10);
    GeodesicSolver solver = euclidean_solver();
    const SurfaceSampling s = sampling_from_embedded(g.embedded);
    const LayerPair lp = build_layers(solver, s);
    const HingeField hl = hinge_angles_from_layers(s.surf, lp.plus, lp.minus);
    const HingeField he = hinge_angles_euclidean(g.embedded);
    CHECK(max_angle_difference(hl, he) <= 1e-6);
  }
  {
    const GeneratedSurface g = generate_cylinder_grid(1.0, 16, 6);
    GeodesicSolver solver = euclidean_solver();
    const SurfaceSampling s = sampling_from_embedded(g.embedded);
    const LayerPair lp = build_layers(solver, s);
    const HingeField hl = hinge_angles_from_layers(s.surf, lp.plus, lp.minus);
    const HingeField he = hinge_angles_euclidean(g.embedded);
    CHECK(max_angle_difference(hl, he) <= 1e-6);
    int interior = 0;
    for (int e = 0; e < s.surf.edge_count(); ++e) interior += hl.valid[e] ? 1 : 0;
    CHECK(interior == s.surf.edge_count() - 2 * 16);
  }
}

TEST_CASE("icosahedron slabs reproduce the closed-form hinge angle") {
  const EmbeddedSurface es = testutil::unit_icosahedron();
  const SurfaceSampling s = sampling_from_embedded(es);
  GeodesicSolver solver = euclidean_solver();
  const LayerPair lp = build_layers(solver, s);
  const HingeField h = hinge_angles_from_layers(s.surf, lp.plus, lp.minus);
  for (int e = 0; e < s.surf.edge_count(); ++e) {
    CHECK(h.angle[e] == doctest::Approx(testutil::icosahedron_hinge_angle()).epsilon(1e-12));
  }

  // Swapping the slabs negates every angle; so does flipping the normals.
  const HingeField swapped = hinge_angles_from_layers(s.surf, lp.minus, lp.plus);
  std::vector<Vec3> flipped = s.normal;
  for (Vec3& n : flipped) n = -n;
  GeodesicSolver solver2 = euclidean_solver();
  const LayerPair lf = build_layers(solver2, sampling_from_embedded(es, flipped));
  const HingeField hf = hinge_angles_from_layers(s.surf, lf.plus, lf.minus);
  for (int e = 0; e < s.surf.edge_count(); ++e) {
    CHECK(swapped.angle[e] == doctest::Approx(-h.angle[e]).epsilon(1e-15));
    CHECK(hf.angle[e] == doctest::Approx(-h.angle[e]).epsilon(1e-10));
  }
}

TEST_CASE("curved slabs: statistics are column-count invariant") {
  auto metric = std::make_shared<GowdyMetric>(0.1);
  auto run = [&](int columns) {
    GeodesicSolver solver(metric);
    const GowdyGrid g = generate_gowdy_grid(GridKind::rectangular, 6, solver, columns);
    const LayerPair lp = build_layers(solver, g.sampling);
    return hinge_angles_from_layers(g.sampling.surf, lp.plus, lp.minus);
  };
  const HingeField h3 = run(3);
  const HingeField h3b = run(3);
  const HingeField h6 = run(6);

  // Deterministic rebuild.
  for (std::size_t e = 0; e < h3.angle.size(); ++e) CHECK(h3.angle[e] == h3b.angle[e]);

  // Individual angles vary across columns: the sorted-id prism diagonals flip
  // where the column index wraps, and the flat measurement of curved wedges
  // feels the decomposition at O(delta^2). The statistics do not.
  double spread = 0.0;
  for (int i = 0; i < 6; ++i) {
    for (int t = 0; t < 3; ++t) {
      double lo = 1e9, hi = -1e9;
      for (int j = 0; j < 3; ++j) {
        const double a = h3.angle[3 * (i * 3 + j) + t];
        lo = std::min(lo, a);
        hi = std::max(hi, a);
      }
      spread = std::max(spread, hi - lo);
    }
  }
  CHECK(spread <= 5e-3);
  CHECK(spread >= 1e-5);  // genuinely present at this resolution

  const HingeStats s3 = hinge_angle_stats(h3);
  const HingeStats s6 = hinge_angle_stats(h6);
  CHECK(s3.count == 54);
  CHECK(s6.count == 108);
  CHECK(std::abs(s3.mean_abs_deg - s6.mean_abs_deg) <= 1e-3);
  CHECK(std::abs(s3.max_abs_deg - s6.max_abs_deg) <= 1e-3);
}

TEST_CASE("curved slab angles settle quadratically as the offset shrinks") {
  auto metric = std::make_shared<GowdyMetric>(0.1);
  auto run = [&](GridKind kind, double delta) {
    GeodesicSolver solver(metric);
    const GowdyGrid g = generate_gowdy_grid(kind, 12, solver);
    const LayerPair lp = build_layers(solver, g.sampling, delta);
    return hinge_angles_from_layers(g.sampling.surf, lp.plus, lp.minus);
  };
  auto max_change = [](const HingeField& a, const HingeField& b) {
    double worst = 0.0;
    for (std::size_t e = 0; e < a.angle.size(); ++e) {
      worst = std::max(worst, std::abs(a.angle[e] - b.angle[e]));
    }
    return worst;
  };

  auto default_delta = [&](GridKind kind) {
    GeodesicSolver probe(metric);
    const GowdyGrid g = generate_gowdy_grid(kind, 12, probe);
    return 0.5 * g.sampling.surf.mean_edge_length();
  };

  const double dr = default_delta(GridKind::rectangular);
  const HingeField r1 = run(GridKind::rectangular, dr);
  const HingeField r2 = run(GridKind::rectangular, 0.5 * dr);
  const HingeField r4 = run(GridKind::rectangular, 0.25 * dr);
  const double c1 = max_change(r1, r2);
  const double c2 = max_change(r2, r4);
  CHECK(c1 <= 1.2e-4);
  CHECK(c2 <= 0.4 * c1);  // roughly quarters per halving
  CHECK(c2 >= 0.15 * c1);

  const double ds = default_delta(GridKind::skew);
  const HingeField s1 = run(GridKind::skew, ds);
  const HingeField s2 = run(GridKind::skew, 0.5 * ds);
  CHECK(max_change(s1, s2) <= 1e-4);
}

TEST_SUITE_END();
