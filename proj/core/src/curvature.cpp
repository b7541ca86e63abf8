#include "pfcurv/curvature.hpp"

#include <cmath>
#include <limits>
#include <map>

namespace pfcurv {

double tangent_turning_angle(double phi, double theta) {
  return 2.0 * std::asin(clamp_unit(std::cos(theta) * std::sin(0.5 * phi)));
}

double geodesic_tangent_integral(const std::vector<HingeCrossing>& crossings) {
  double total = 0.0;
  for (const HingeCrossing& c : crossings) total += tangent_turning_angle(c.phi, c.theta);
  return total;
}

VertexField mean_curvature(const SimplicialSurface& s, const DualTessellation& dual,
                           const HingeField& hinges) {
  const int nv = s.vertex_count();
  VertexField out;
  out.value.assign(nv, std::numeric_limits<double>::quiet_NaN());
  out.valid.assign(nv, true);

  std::vector<double> acc(nv, 0.0);
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& edge = s.edge(e);
    if (!s.edge_is_interior(e)) {
      out.valid[edge.u] = false;
      out.valid[edge.v] = false;
      continue;
    }
    const double w = 0.5 * edge.length * hinges.angle[e];
    acc[edge.u] += w;
    acc[edge.v] += w;
  }
  for (int v = 0; v < nv; ++v) {
    if (!out.valid[v]) continue;
    out.value[v] = acc[v] / (2.0 * dual.vertex_area(v));
  }
  return out;
}

double total_mean_curvature(const SimplicialSurface& s, const HingeField& hinges) {
  double total = 0.0;
  for (int e = 0; e < s.edge_count(); ++e) {
    if (!s.edge_is_interior(e)) continue;
    total += 0.5 * s.length(e) * hinges.angle[e];
  }
  return total;
}

HingeRegion build_hinge_region(const SimplicialSurface& s, const DualTessellation& dual,
                               int hinge) {
  HingeRegion region;
  region.hinge = hinge;
  region.development = develop_strip(s, hinge);

  const auto& h = s.edge(hinge);
  const double L = h.length;
  const double tol = 1e-12 * L;

  // Endpoint cell fragments mapped into strip coordinates, then clipped to
  // the band 0 <= x <= L. Fragments of distinct (triangle, corner) pairs are
  // disjoint, so their areas add.
  for (const PlacedTriangle2& pt : region.development.triangles) {
    const auto& t = s.triangle(pt.tri);
    const auto& fr = dual.fragments(pt.tri);
    const Isometry2 iso = map_segment(fr.frame[0], fr.frame[1], pt.p[0], pt.p[1]);
    for (int i = 0; i < 3; ++i) {
      if (t.v[i] != h.u && t.v[i] != h.v) continue;
      const auto& poly = fr.corner[i];
      if (poly.size() < 3) continue;
      std::vector<Vec2> mapped;
      mapped.reserve(poly.size() + 2);
      for (const Vec2& p : poly) mapped.push_back(iso(p));
      mapped = clip_halfplane(mapped, Vec2(1.0, 0.0), 0.0, tol);
      mapped = clip_halfplane(mapped, Vec2(-1.0, 0.0), L, tol);
      if (mapped.size() < 3) continue;
      const double a = std::abs(polygon_area(mapped));
      if (a <= tol * L) continue;
      region.area += a;
      region.fragments.push_back(std::move(mapped));
    }
  }
  if (!(region.area > 0.0)) throw EmptyRegion(hinge);

  // Clipped length per crossing edge. Only star edges of the hinge endpoints
  // can meet the region. A placed instance parameterizes its edge from u to v,
  // so intervals from different instances of one edge measure subsets of the
  // same edge and combine by union.
  struct Acc {
    std::vector<std::pair<double, double>> intervals;
    double best_instance = -1.0;
    double theta = 0.0;
  };
  std::map<int, Acc> crossings;
  for (const PlacedEdge& pe : region.development.edges) {
    const auto& e = s.edge(pe.edge);
    if (e.u != h.u && e.u != h.v && e.v != h.u && e.v != h.v) continue;
    Acc& acc = crossings[pe.edge];
    double instance_total = 0.0;
    for (const auto& poly : region.fragments) {
      double t0 = 0.0, t1 = 0.0;
      if (!segment_in_convex(pe.a, pe.b, poly, tol, t0, t1)) continue;
      acc.intervals.emplace_back(t0, t1);
      instance_total += t1 - t0;
    }
    if (instance_total > acc.best_instance) {
      acc.best_instance = instance_total;
      acc.theta = pe.theta;
    }
  }
  for (const auto& [e, acc] : crossings) {
    const double len = interval_union_length(acc.intervals) * s.length(e);
    if (len <= tol) continue;
    region.contributions.push_back(HingeRegion::Contribution{e, len, acc.theta});
  }
  return region;
}

double directed_curvature_at(const HingeRegion& region, const HingeField& hinges) {
  double sum = 0.0;
  for (const auto& c : region.contributions) {
    if (!hinges.valid[c.edge]) continue;  // boundary edges carry no bending
    const double ct = std::cos(c.theta);
    sum += c.length * ct * ct * hinges.angle[c.edge];
  }
  return sum / region.area;
}

EdgeField directed_curvature(const SimplicialSurface& s, const DualTessellation& dual,
                             const HingeField& hinges) {
  EdgeField out;
  const int ne = s.edge_count();
  out.value.assign(ne, std::numeric_limits<double>::quiet_NaN());
  out.area.assign(ne, std::numeric_limits<double>::quiet_NaN());
  out.valid.assign(ne, false);
  for (int e = 0; e < ne; ++e) {
    if (!s.edge_is_interior(e)) continue;
    const HingeRegion region = build_hinge_region(s, dual, e);
    out.value[e] = directed_curvature_at(region, hinges);
    out.area[e] = region.area;
    out.valid[e] = true;
  }
  return out;
}

TriangleTensor triangle_tensor(const SimplicialSurface& s, const std::vector<double>& edge_kappa,
                               int tri) {
  const auto& t = s.triangle(tri);
  const double l0 = s.length(t.e[0]);
  const double l1 = s.length(t.e[1]);
  const double l2 = s.length(t.e[2]);

  TriangleTensor out;
  const PlacedTriangle pt = place_triangle(l0, l1, l2);
  out.frame = {pt.a, pt.b, pt.c};

  // The corners run counterclockwise, so the outward normal of edge i is the
  // clockwise rotation of its direction. The normals satisfy sum l_i n_i = 0,
  // which ties the three directed curvatures to one symmetric form.
  Eigen::Matrix3d m;
  Eigen::Vector3d rhs;
  for (int i = 0; i < 3; ++i) {
    const Vec2 d = (out.frame[(i + 1) % 3] - out.frame[i]).normalized();
    const Vec2 n(d.y(), -d.x());
    out.edge_normal[i] = n;
    m(i, 0) = n.x() * n.x();
    m(i, 1) = 2.0 * n.x() * n.y();
    m(i, 2) = n.y() * n.y();
    rhs(i) = edge_kappa[t.e[i]];
  }
  const Eigen::FullPivLU<Eigen::Matrix3d> lu(m);
  if (!lu.isInvertible()) throw NumericalError("triangle tensor: degenerate edge directions");
  const Eigen::Vector3d x = lu.solve(rhs);
  out.form << x(0), x(1), x(1), x(2);
  return out;
}

}  // namespace pfcurv
