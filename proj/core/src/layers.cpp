#include "pfcurv/layers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pfcurv/errors.hpp"

namespace pfcurv {
namespace {

double cayley_menger(const std::array<std::array<double, 4>, 4>& d) {
  Eigen::Matrix<double, 5, 5> m;
  m(0, 0) = 0.0;
  for (int i = 0; i < 4; ++i) {
    m(0, i + 1) = 1.0;
    m(i + 1, 0) = 1.0;
    for (int j = 0; j < 4; ++j) m(i + 1, j + 1) = d[i][j] * d[i][j];
  }
  return m.determinant();
}

// Builds the slab on one side of the surface. Corner offsets are shot from
// the seam-resolved corner positions along the vertex normal, so quotient
// meshes stay consistent as long as the deck translations are isometries.
LayeredComplex build_side(GeodesicSolver& solver, const SurfaceSampling& s, double delta,
                          int side) {
  const SimplicialSurface& surf = s.surf;
  const AmbientMetric& g = solver.metric();
  LayeredComplex lc;
  lc.side = side;
  lc.delta = delta;
  lc.edge_tets.resize(surf.edge_count());

  for (int t = 0; t < surf.triangle_count(); ++t) {
    const auto& tri = surf.triangle(t);
    // Two mirrored prism tilings, weight 1/2 each: ascending-id diagonals
    // run from the offset of the smaller id to the larger base id,
    // descending-id diagonals the other way. Both are consistent across
    // shared quad faces; their average samples the ambient metric
    // symmetrically about each edge, which a single family does not.
    for (const bool descending : {false, true}) {
      std::array<int, 3> ord{0, 1, 2};
      std::sort(ord.begin(), ord.end(), [&](int x, int y) {
        return descending ? tri.v[x] > tri.v[y] : tri.v[x] < tri.v[y];
      });

      std::array<Vec3, 6> pos;   // ordered base corners then their offsets
      std::array<int, 6> tag;
      for (int k = 0; k < 3; ++k) {
        const int v = tri.v[ord[k]];
        pos[k] = s.corner[t][ord[k]];
        tag[k] = v;
        pos[k + 3] = geodesic_shoot(g, pos[k], side * s.normal[v], delta).point;
        tag[k + 3] = ~v;
      }

      const std::array<std::array<int, 4>, 3> split{{{0, 1, 2, 3}, {3, 1, 2, 4}, {3, 4, 2, 5}}};
      // Base-corner pairs each tet keeps, as local tet indices.
      const std::array<std::vector<std::array<int, 2>>, 3> base_pairs{{
          {{{0, 1}}, {{0, 2}}, {{1, 2}}},
          {{{1, 2}}},
          {},
      }};
      for (int k = 0; k < 3; ++k) {
        LayerTet tet;
        tet.tri = t;
        for (int i = 0; i < 4; ++i) {
          tet.vertex_tag[i] = tag[split[k][i]];
          tet.len[i][i] = 0.0;
          for (int j = 0; j < i; ++j) {
            const double d = solver.distance(pos[split[k][i]], pos[split[k][j]]);
            tet.len[i][j] = tet.len[j][i] = d;
          }
        }
        const double cm = cayley_menger(tet.len);
        if (!(cm > 0.0)) {
          throw DegenerateTetrahedron("layer tet over triangle " + std::to_string(t) +
                                      " is not realizable");
        }
        const int tet_id = static_cast<int>(lc.tets.size());
        for (const auto& bp : base_pairs[k]) {
          const int gu = tet.vertex_tag[bp[0]];
          const int gv = tet.vertex_tag[bp[1]];
          const auto e = surf.find_edge(gu, gv);
          if (!e) throw InvalidInput("triangle edge missing from the complex");
          lc.edge_tets[*e].push_back({tet_id, bp[0], bp[1], 0.5});
        }
        lc.tets.push_back(tet);
      }
    }
  }
  return lc;
}

}  // namespace

double tet_dihedral(const std::array<std::array<double, 4>, 4>& len, int a, int b) {
  std::array<int, 2> rest;
  int r = 0;
  for (int i = 0; i < 4; ++i) {
    if (i != a && i != b) rest[r++] = i;
  }
  const int c = rest[0], d = rest[1];
  // Corner angles at a; the dihedral along (a,b) separates faces (a,b,c)
  // and (a,b,d).
  const double alpha = angle_between_sides(len[a][b], len[a][c], len[b][c]);
  const double beta = angle_between_sides(len[a][b], len[a][d], len[b][d]);
  const double gamma = angle_between_sides(len[a][c], len[a][d], len[c][d]);
  const double sa = std::sin(alpha), sb = std::sin(beta);
  if (sa < 1e-14 || sb < 1e-14) {
    throw DegenerateTetrahedron("flat corner while measuring a dihedral");
  }
  return std::acos(clamp_unit((std::cos(gamma) - std::cos(alpha) * std::cos(beta)) / (sa * sb)));
}

LayerPair build_layers(GeodesicSolver& solver, const SurfaceSampling& s, double delta) {
  const int nv = s.surf.vertex_count();
  if (static_cast<int>(s.position.size()) != nv || static_cast<int>(s.normal.size()) != nv ||
      static_cast<int>(s.corner.size()) != s.surf.triangle_count()) {
    throw InvalidInput("sampling arrays do not match the complex");
  }
  if (delta <= 0.0) delta = 0.5 * s.surf.mean_edge_length();
  LayerPair lp{build_side(solver, s, delta, +1), build_side(solver, s, delta, -1)};
  return lp;
}

HingeField hinge_angles_from_layers(const SimplicialSurface& surf, const LayeredComplex& plus,
                                    const LayeredComplex& minus) {
  const int ne = surf.edge_count();
  if (static_cast<int>(plus.edge_tets.size()) != ne ||
      static_cast<int>(minus.edge_tets.size()) != ne) {
    throw InvalidInput("layers were built over a different complex");
  }
  HingeField f;
  f.source = HingeField::Source::layered_metric;
  f.angle.assign(ne, std::numeric_limits<double>::quiet_NaN());
  f.valid.assign(ne, false);
  for (int e = 0; e < ne; ++e) {
    if (!surf.edge_is_interior(e)) continue;
    double wedge_plus = 0.0, wedge_minus = 0.0;
    for (const EdgeInTet& et : plus.edge_tets[e]) {
      wedge_plus += et.weight * tet_dihedral(plus.tets[et.tet].len, et.a, et.b);
    }
    for (const EdgeInTet& et : minus.edge_tets[e]) {
      wedge_minus += et.weight * tet_dihedral(minus.tets[et.tet].len, et.a, et.b);
    }
    f.angle[e] = 0.5 * (wedge_minus - wedge_plus);
    f.valid[e] = true;
  }
  return f;
}

}  // namespace pfcurv
