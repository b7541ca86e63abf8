#pragma once

#include <cmath>
#include <vector>

#include "pfcurv/embedding.hpp"
#include "pfcurv/surface.hpp"

namespace testutil {

inline constexpr double kPi = 3.14159265358979323846;

// Regular icosahedron scaled to unit circumradius, oriented outward.
inline pfcurv::EmbeddedSurface unit_icosahedron() {
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  const double s = 1.0 / std::sqrt(1.0 + phi * phi);
  std::vector<pfcurv::Vec3> v = {
      {-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
      {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
      {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1},
  };
  for (auto& p : v) p *= s;
  std::vector<pfcurv::TriangleSpec> f = {
      {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
      {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
      {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
      {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1},
  };
  pfcurv::EmbeddedSurface es = pfcurv::embed_points(v, f);
  // The face table above is outward; double-check rather than trust it.
  for (int t = 0; t < es.surface.triangle_count(); ++t) {
    const auto& tv = es.surface.triangle(t).v;
    const pfcurv::Vec3 centroid =
        (es.positions[tv[0]] + es.positions[tv[1]] + es.positions[tv[2]]) / 3.0;
    if (es.triangle_normals[t].dot(centroid) <= 0.0) {
      throw std::logic_error("icosahedron table is not outward-oriented");
    }
  }
  return es;
}

// Closed-form hinge angle of the unit icosahedron: the interior dihedral is
// acos(-sqrt(5)/3); convex with outward orientation, hence negative.
inline double icosahedron_hinge_angle() {
  return -(kPi - std::acos(-std::sqrt(5.0) / 3.0));
}

// Planar grid patch in the z=0 plane, normals +z, quads split one way.
inline pfcurv::EmbeddedSurface flat_grid(int nx, int ny, double step) {
  std::vector<pfcurv::Vec3> pos;
  pos.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) pos.push_back({i * step, j * step, 0.0});
  }
  auto id = [nx](int i, int j) { return j * nx + i; };
  std::vector<pfcurv::TriangleSpec> tris;
  for (int j = 0; j + 1 < ny; ++j) {
    for (int i = 0; i + 1 < nx; ++i) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return pfcurv::embed_points(pos, tris);
}

// Intrinsic flat torus built from unit equilateral triangles; rows and cols
// must be at least 3 so the quotient stays simplicial.
inline pfcurv::SimplicialSurface equilateral_torus(int rows, int cols) {
  auto id = [cols](int i, int j) { return j * cols + i; };
  std::vector<pfcurv::EdgeSpec> edges;
  std::vector<pfcurv::TriangleSpec> tris;
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < cols; ++i) {
      const int a = id(i, j);
      const int b = id((i + 1) % cols, j);
      const int c = id(i, (j + 1) % rows);
      const int d = id((i + 1) % cols, (j + 1) % rows);
      edges.push_back({a, b, 1.0});
      edges.push_back({a, c, 1.0});
      edges.push_back({b, c, 1.0});  // the rhombus diagonal
      tris.push_back({a, b, c});
      tris.push_back({b, d, c});
    }
  }
  return pfcurv::SimplicialSurface::build(rows * cols, edges, tris);
}

}  // namespace testutil
