#pragma once

#include <vector>

#include "pfcurv/development.hpp"
#include "pfcurv/dual.hpp"
#include "pfcurv/geometry.hpp"
#include "pfcurv/hinge.hpp"
#include "pfcurv/surface.hpp"

namespace pfcurv {

// Turning of a geodesic's tangent across one hinge, where theta is the angle
// between the crossing direction and the hinge normal within the surface:
//   psi = 2 asin(cos(theta) sin(phi/2)).
double tangent_turning_angle(double phi, double theta);

struct HingeCrossing {
  double phi;
  double theta;
};

// Total turning along a broken-geodesic path: the sum of per-hinge turnings.
double geodesic_tangent_integral(const std::vector<HingeCrossing>& crossings);

struct VertexField {
  std::vector<double> value;
  std::vector<bool> valid;  // false where the star touches the boundary
};

// Mean curvature at every vertex with an all-interior star:
//   H_v = (1 / (2 |V_v|)) * sum over star hinges of (|h|/2) phi_h.
VertexField mean_curvature(const SimplicialSurface& s, const DualTessellation& dual,
                           const HingeField& hinges);

// Integral of H over the whole surface: (1/2) sum |h| phi_h over hinges.
double total_mean_curvature(const SimplicialSurface& s, const HingeField& hinges);

// Region around a hinge: the two endpoint dual cells developed into the
// hinge strip and clipped to 0 <= x <= |h|, together with the clipped length
// and direction angle of every star edge that meets the region.
struct HingeRegion {
  struct Contribution {
    int edge;
    double length;  // measure of edge subset inside the region
    double theta;   // acute angle to the hinge line
  };

  int hinge = -1;
  double area = 0.0;
  std::vector<Contribution> contributions;     // includes the hinge itself
  std::vector<std::vector<Vec2>> fragments;    // clipped cell pieces (development coords)
  Development development;
};

HingeRegion build_hinge_region(const SimplicialSurface& s, const DualTessellation& dual,
                               int hinge);

struct EdgeField {
  std::vector<double> value;
  std::vector<double> area;  // |V_h|
  std::vector<bool> valid;
};

// Directed (normal-direction) curvature at one hinge from its region:
//   kappa_h = (1/|V_h|) * sum over crossing hinges of |h_i ^ V_h| cos^2(theta_i) phi_i.
// Boundary edges crossed by the region carry no bending and add nothing.
double directed_curvature_at(const HingeRegion& region, const HingeField& hinges);

// kappa_h for every interior hinge.
EdgeField directed_curvature(const SimplicialSurface& s, const DualTessellation& dual,
                             const HingeField& hinges);

// Symmetric curvature tensor on one triangle, reconstructed from the three
// directed edge curvatures via the closing relation
//   |l0| v0 + |l1| v1 + |l2| v2 = 0
// for the outward edge normals v_i, which forces
//   alpha(v_a, v_b) = (-|l_a|^2 k_a - |l_b|^2 k_b + |l_c|^2 k_c) / (2 |l_a| |l_b|).
struct TriangleTensor {
  std::array<Vec2, 3> frame;        // intrinsic corner positions
  std::array<Vec2, 3> edge_normal;  // outward unit normal per edge
  Mat2 form;                        // quadratic form in frame coordinates

  double operator()(const Vec2& direction) const {
    const Vec2 d = direction.normalized();
    return d.dot(form * d);
  }
};

TriangleTensor triangle_tensor(const SimplicialSurface& s, const std::vector<double>& edge_kappa,
                               int tri);

}  // namespace pfcurv
