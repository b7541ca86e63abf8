#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "pfcurv/smooth.hpp"

using namespace pfcurv;
using namespace testutil;

TEST_SUITE("smooth") {
  TEST_CASE("surface registry") {
    CHECK_THROWS_AS((void)make_surface("torus"), UnknownSurface);

    const SmoothSurface ms = make_surface("modified-sphere");
    CHECK((ms.position(Vec2(0.0, 0.7)) - Vec3(0, 0, 1)).norm() < 1e-12);

    const SmoothSurface pn = make_surface("peanut");
    CHECK((pn.position(Vec2(kPi / 2.0, kPi / 2.0)) - Vec3(0, std::sqrt(0.5), 0)).norm() < 1e-12);

    const SmoothSurface gp = make_surface("gowdy-plane");
    CHECK((gp.position(Vec2(0.0, 3.0)) - Vec3(-1.0, 0.0, kPi)).norm() < 1e-12);
  }

  TEST_CASE("frame invariants") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dt(0.4, kPi - 0.4);
    std::uniform_real_distribution<double> dp(-3.0, 3.0);
    for (const char* name : {"peanut", "modified-sphere", "gowdy-plane"}) {
      const SmoothSurface s = make_surface(name);
      for (int k = 0; k < 8; ++k) {
        const Vec2 uv = (std::string(name) == "gowdy-plane") ? Vec2(dp(rng), dp(rng))
                                                             : Vec2(dt(rng), dp(rng));
        const auto f = s.frame(uv);
        const Mat3 g = s.ambient().metric(f.x);
        CHECK(std::abs(f.normal.dot(g * f.xu)) < 1e-10 * f.xu.norm());
        CHECK(std::abs(f.normal.dot(g * f.xv)) < 1e-10 * f.xv.norm());
        CHECK(f.normal.dot(g * f.normal) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(f.first.determinant() > 0.0);
        CHECK(f.first(0, 0) > 0.0);
        CHECK(f.second(0, 1) == f.second(1, 0));
      }
    }
  }

  TEST_CASE("round sphere is umbilic with H = -1/R") {
    const SmoothSurface s = make_surface("round-sphere", 2.0);
    const Vec2 uv(1.1, 0.6);
    CHECK(s.mean_curvature(uv) == doctest::Approx(-0.5).epsilon(1e-8));
    const auto pc = s.principal_curvatures(uv);
    CHECK(pc[0] == doctest::Approx(-0.5).epsilon(1e-6));
    CHECK(pc[1] == doctest::Approx(-0.5).epsilon(1e-6));

    const auto f = s.frame(uv);
    std::mt19937 rng(2);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int k = 0; k < 10; ++k) {
      const Vec3 dir = d(rng) * f.xu + d(rng) * f.xv;
      CHECK(s.directional_curvature(uv, dir) == doctest::Approx(-0.5).epsilon(1e-6));
    }
  }

  TEST_CASE("cylinder principal directions") {
    const SmoothSurface s = make_surface("cylinder", 0.5);
    const Vec2 uv(0.8, 1.3);
    const auto f = s.frame(uv);
    CHECK(s.directional_curvature(uv, f.xv) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(s.directional_curvature(uv, f.xu) == doctest::Approx(-2.0).epsilon(1e-7));
    CHECK(s.mean_curvature(uv) == doctest::Approx(-1.0).epsilon(1e-7));
    const auto pc = s.principal_curvatures(uv);
    CHECK(pc[0] == doctest::Approx(-2.0).epsilon(1e-7));
    CHECK(pc[1] == doctest::Approx(0.0).epsilon(1e-7));
  }

  TEST_CASE("mean curvature is basis independent") {
    const SmoothSurface s = make_surface("peanut");
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> dt(0.5, kPi - 0.5);
    std::uniform_real_distribution<double> dp(0.0, 2.0 * kPi);
    for (int k = 0; k < 6; ++k) {
      const Vec2 uv(dt(rng), dp(rng));
      const double h = s.mean_curvature(uv);
      for (int j = 0; j < 4; ++j) {
        CHECK(s.mean_curvature_via_directions(uv, dp(rng)) == doctest::Approx(h).epsilon(1e-10));
      }
    }
  }

  TEST_CASE("polarization identity") {
    const SmoothSurface s = make_surface("peanut");
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dt(0.5, kPi - 0.5);
    std::uniform_real_distribution<double> dp(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> dc(-1.0, 1.0);
    for (int k = 0; k < 10; ++k) {
      const Vec2 uv(dt(rng), dp(rng));
      const auto f = s.frame(uv);
      const Vec3 a = dc(rng) * f.xu + dc(rng) * f.xv;
      const Vec3 b = dc(rng) * f.xu + dc(rng) * f.xv;
      if (a.norm() < 0.1 || b.norm() < 0.1) continue;
      CHECK(s.pair_curvature_polarized(uv, a, b) ==
            doctest::Approx(s.pair_curvature(uv, a, b)).epsilon(1e-10));
    }

    // The two mean-curvature routes agree at the spec's benchmark point.
    const SmoothSurface ms = make_surface("modified-sphere");
    const Vec2 uv(kPi / 2.0, 0.0);
    CHECK(ms.mean_curvature(uv) ==
          doctest::Approx(ms.mean_curvature_via_directions(uv, 0.37)).epsilon(1e-8));
  }

  TEST_CASE("path integrals on analytic arcs") {
    // Equator arc of 1 radian on the unit sphere turns by -1.
    const SmoothSurface sph = make_surface("round-sphere", 1.0);
    std::vector<Vec2> arc;
    for (int i = 0; i <= 200; ++i) arc.emplace_back(kPi / 2.0, i / 200.0);
    CHECK(smooth_path_integral(sph, arc) == doctest::Approx(-1.0).epsilon(1e-4));

    // Quarter circumferential turn on the unit cylinder.
    const SmoothSurface cyl = make_surface("cylinder", 1.0);
    arc.clear();
    for (int i = 0; i <= 200; ++i) arc.emplace_back((kPi / 2.0) * i / 200.0, 0.25);
    CHECK(smooth_path_integral(cyl, arc) == doctest::Approx(-kPi / 2.0).epsilon(1e-4));

    // Axial lines are straight.
    arc.clear();
    for (int i = 0; i <= 50; ++i) arc.emplace_back(0.3, i / 50.0);
    CHECK(std::abs(smooth_path_integral(cyl, arc)) < 1e-8);
  }

  TEST_CASE("surface geodesics on the sphere") {
    const SmoothSurface s = make_surface("round-sphere", 1.0);
    PathOptions opt;
    opt.initial_segments = 16;
    opt.length_rel_tol = 1e-8;

    // Equator segment.
    const SurfacePath eq = surface_geodesic(s, Vec2(kPi / 2.0, 0.0), Vec2(kPi / 2.0, 1.0), opt);
    CHECK(eq.length == doctest::Approx(1.0).epsilon(1e-6));
    const SurfaceMidpoint mid = surface_path_midpoint(s, eq);
    CHECK(mid.uv.x() == doctest::Approx(kPi / 2.0).epsilon(1e-5));
    CHECK(mid.uv.y() == doctest::Approx(0.5).epsilon(1e-5));
    CHECK(mid.tangent.norm() == doctest::Approx(1.0).epsilon(1e-10));

    // Meridian from the pole; the polar longitude is arbitrary.
    const SurfacePath mer = surface_geodesic(s, Vec2(0.0, 2.2), Vec2(kPi / 2.0, 0.3), opt);
    CHECK(mer.length == doctest::Approx(kPi / 2.0).epsilon(1e-6));
    const SurfaceMidpoint mmid = surface_path_midpoint(s, mer);
    CHECK(mmid.uv.x() == doctest::Approx(kPi / 4.0).epsilon(1e-4));
    CHECK(mmid.uv.y() == doctest::Approx(0.3).epsilon(1e-6));

    // Longitude wraps the short way.
    const SurfacePath wrap =
        surface_geodesic(s, Vec2(kPi / 2.0, 0.1), Vec2(kPi / 2.0, 6.2), opt);
    CHECK(wrap.length == doctest::Approx(2.0 * kPi - 6.1).epsilon(1e-4));
  }

  TEST_CASE("gowdy plane reference values") {
    const SmoothSurface s = make_surface("gowdy-plane");

    // Normal points to +x and has no y component.
    const auto f = s.frame(Vec2(0.4, 1.7));
    CHECK(f.normal.x() > 0.0);
    CHECK(std::abs(f.normal.y()) < 1e-10);

    // Homogeneous in the first parameter, periodic in the second (period 6
    // maps to a full z period).
    const double h = s.mean_curvature(Vec2(0.0, 1.1));
    CHECK(s.mean_curvature(Vec2(4.0, 1.1)) == doctest::Approx(h).epsilon(1e-10));
    CHECK(s.mean_curvature(Vec2(0.0, 7.1)) == doctest::Approx(h).epsilon(1e-7));

    // Curvature genuinely varies along z and stays small (amplitude 0.1).
    double lo = 1e300, hi = -1e300;
    for (int i = 0; i < 24; ++i) {
      const double v = s.mean_curvature(Vec2(0.0, 6.0 * i / 24.0));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      CHECK(std::abs(v) < 0.1);
    }
    CHECK(hi - lo > 1e-3);
  }
}
