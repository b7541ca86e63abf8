#include "pfcurv/baselines.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "pfcurv/errors.hpp"

namespace pfcurv {
namespace {

bool star_is_interior(const SimplicialSurface& s, int v) {
  for (int e : s.vertex_edges(v)) {
    if (!s.edge_is_interior(e)) return false;
  }
  return s.vertex_is_interior(v);
}

double cot_opposite(const SimplicialSurface& s, int t, int e) {
  const double a = s.corner_angle(t, s.opposite_vertex(t, e));
  return std::cos(a) / std::sin(a);
}

}  // namespace

CotanCurvature cotan_mean_curvature(const EmbeddedSurface& es, const DualTessellation& dual) {
  const SimplicialSurface& s = es.surface;
  CotanCurvature out;
  out.value.assign(s.vertex_count(), 0.0);
  out.direction.assign(s.vertex_count(), Vec3::Zero());
  out.valid.assign(s.vertex_count(), false);

  for (int v = 0; v < s.vertex_count(); ++v) {
    if (!star_is_interior(s, v)) continue;
    Vec3 sum = Vec3::Zero();
    for (int e : s.vertex_edges(v)) {
      const auto& ed = s.edge(e);
      const int other = (ed.u == v) ? ed.v : ed.u;
      const double w = cot_opposite(s, ed.tri_forward, e) + cot_opposite(s, ed.tri_backward, e);
      sum += w * (es.positions[v] - es.positions[other]);
    }
    sum /= 4.0 * dual.vertex_area(v);
    const double mag = sum.norm();
    out.valid[v] = true;
    if (mag > 0.0) {
      out.direction[v] = sum / mag;
      // Toward the positive side means the surface bends away from it.
      out.value[v] = (sum.dot(es.vertex_normal(v)) > 0.0) ? -mag : mag;
    }
  }
  return out;
}

CsmCurvature csm_tensor(const EmbeddedSurface& es, const DualTessellation& dual) {
  const SimplicialSurface& s = es.surface;
  const HingeField hinges = hinge_angles_euclidean(es);

  CsmCurvature out;
  out.tensor.resize(s.vertex_count());
  out.principal.assign(s.vertex_count(), {0.0, 0.0});
  out.valid.assign(s.vertex_count(), false);

  for (int v = 0; v < s.vertex_count(); ++v) {
    VertexTensor3& vt = out.tensor[v];
    vt.vertex = v;
    vt.area = dual.vertex_area(v);
    if (!star_is_interior(s, v)) continue;

    Mat3 sum = Mat3::Zero();
    for (int e : s.vertex_edges(v)) {
      const auto& ed = s.edge(e);
      const double phi = hinges.angle[e];
      const Vec3& na = es.triangle_normals[ed.tri_forward];
      const Vec3& nb = es.triangle_normals[ed.tri_backward];
      const double half_inside = (ed.u == v) ? dual.edge_split(e)[0] : dual.edge_split(e)[1];
      const double w = 0.5 * half_inside;
      const Vec3 plus = na + nb;
      const Vec3 minus = na - nb;
      // A vanishing difference (or sum) carries a vanishing weight.
      if (plus.norm() > 1e-12) {
        const Vec3 ep = plus.normalized();
        sum += w * (phi - std::sin(phi)) * (ep * ep.transpose());
      }
      if (minus.norm() > 1e-12) {
        const Vec3 em = minus.normalized();
        sum += w * (phi + std::sin(phi)) * (em * em.transpose());
      }
    }
    vt.tensor = sum / vt.area;
    out.valid[v] = true;

    Eigen::SelfAdjointEigenSolver<Mat3> eig(vt.tensor);
    if (eig.info() != Eigen::Success) throw NumericalError("tensor eigensolve failed");
    const Vec3 n = es.vertex_normal(v);
    int drop = 0;
    double best = -1.0;
    for (int k = 0; k < 3; ++k) {
      const double align = std::abs(eig.eigenvectors().col(k).dot(n));
      if (align > best) {
        best = align;
        drop = k;
      }
    }
    std::array<double, 2> pc{};
    int at = 0;
    for (int k = 0; k < 3; ++k) {
      if (k != drop) pc[at++] = eig.eigenvalues()(k);
    }
    if (pc[0] > pc[1]) std::swap(pc[0], pc[1]);
    out.principal[v] = pc;
  }
  return out;
}

}  // namespace pfcurv
