#pragma once

#include <array>
#include <vector>

#include "pfcurv/generators.hpp"
#include "pfcurv/geodesic.hpp"
#include "pfcurv/hinge.hpp"
#include "pfcurv/surface.hpp"

namespace pfcurv {

// One tetrahedron of a layer, known only through its pairwise geodesic
// lengths. vertex_tag[k] >= 0 names a surface vertex; ~tag marks the offset
// copy of that vertex.
struct LayerTet {
  int tri = -1;
  std::array<int, 4> vertex_tag{};
  std::array<std::array<double, 4>, 4> len{};  // symmetric, zero diagonal
};

// Where a surface edge appears inside a layer tet. weight scales the tet's
// dihedral contribution to the wedge sum at that edge.
struct EdgeInTet {
  int tet;
  int a, b;  // local indices of the edge endpoints within the tet
  double weight = 1.0;
};

// Piecewise flat slab over one side of the surface. Each triangle's prism
// (triangle plus offset copies of its corners) is split into three tets
// twice, once along ascending and once along descending vertex ids, and the
// two tilings enter wedge sums with weight 1/2 each. Within either family
// neighbouring prisms agree on the quad diagonals and the tets tile the
// slab; averaging the mirrored families cancels the odd sampling bias a
// one-sided diagonal choice picks up from ambient curvature gradients.
struct LayeredComplex {
  int side = +1;  // +1 offsets toward the positive orientation side
  double delta = 0.0;
  std::vector<LayerTet> tets;
  std::vector<std::vector<EdgeInTet>> edge_tets;  // per surface edge
};

struct LayerPair {
  LayeredComplex plus, minus;
};

// Offsets every corner along +/- the vertex normal by geodesic shooting and
// assembles the two slabs; delta <= 0 selects half the mean edge length.
// Tet edge lengths are geodesic distances through the solver. Throws
// DegenerateTetrahedron when a tet's Cayley-Menger determinant is not
// positive.
LayerPair build_layers(GeodesicSolver& solver, const SurfaceSampling& s, double delta = 0.0);

// Interior dihedral angle along the edge between local vertices a and b,
// from the six lengths alone (corner angles plus the spherical law of
// cosines).
double tet_dihedral(const std::array<std::array<double, 4>, 4>& len, int a, int b);

// Hinge angle as half the difference of the wedge angles the two slabs
// subtend at each interior edge: phi = (wedge_minus - wedge_plus) / 2,
// positive where the surface is concave toward the positive side. In a flat
// ambient space the wedges sum to 2 pi and the angles match the
// normal-based computation. Boundary edges are invalid.
HingeField hinge_angles_from_layers(const SimplicialSurface& surf, const LayeredComplex& plus,
                                    const LayeredComplex& minus);

}  // namespace pfcurv
