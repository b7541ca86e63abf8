#include "pfcurv/generators.hpp"

#include <cmath>

#include "pfcurv/errors.hpp"
#include "pfcurv/smooth.hpp"

namespace pfcurv {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

struct Ring {
  std::vector<int> id;
  std::vector<double> az;  // increasing within one period
};

// Triangulates the band between upper ring A and lower ring B with one
// angular sweep: whichever ring's next vertex comes first in azimuth is
// stitched in, giving |A|+|B| triangles wound counterclockwise seen from
// outside. Works for equal and unequal ring sizes alike.
void merge_band(const Ring& A, const Ring& B, std::vector<TriangleSpec>& out) {
  const int a = static_cast<int>(A.id.size());
  const int b = static_cast<int>(B.id.size());
  auto ext = [](const std::vector<double>& az, int k) {
    const int n = static_cast<int>(az.size());
    return az[k % n] + kTwoPi * (k / n);
  };
  int jstart = 0;  // first B vertex at or after A's first vertex, maybe a wrap ahead
  while (jstart < b && B.az[jstart] < A.az[0]) ++jstart;
  int ia = 0, jb = jstart;
  const int ia_end = a, jb_end = jstart + b;
  while (ia < ia_end || jb < jb_end) {
    const bool can_a = ia < ia_end, can_b = jb < jb_end;
    if (can_a && (!can_b || ext(A.az, ia + 1) <= ext(B.az, jb + 1))) {
      out.push_back({A.id[ia % a], B.id[jb % b], A.id[(ia + 1) % a]});
      ++ia;
    } else {
      out.push_back({A.id[ia % a], B.id[jb % b], B.id[(jb + 1) % b]});
      ++jb;
    }
  }
}

}  // namespace

SphereScheme sphere_scheme(int layers) {
  if (layers != 6 && layers != 10 && layers != 14 && layers != 18 && layers != 22) {
    throw UnsupportedLayerCount(layers);
  }
  SphereScheme sch;
  sch.layers = layers;
  const int m = (layers + 2) / 4;
  for (int k = 1; k < m; ++k) sch.ring_size.push_back(6 * k);
  for (int r = 0; r < layers - 2 * m + 1; ++r) sch.ring_size.push_back(6 * m);
  for (int k = m - 1; k >= 1; --k) sch.ring_size.push_back(6 * k);
  for (std::size_t i = 0; i < sch.ring_size.size(); ++i) {
    sch.ring_phase.push_back((i % 2) ? 0.5 : 0.0);
  }
  return sch;
}

GeneratedSurface generate_layered_surface(const std::string& name, int layers) {
  if (name != "modified-sphere" && name != "peanut" && name != "round-sphere") {
    throw UnknownSurface(name);
  }
  const SphereScheme sch = sphere_scheme(layers);
  const SmoothSurface smooth = make_surface(name);

  GeneratedSurface out;
  out.smooth_name = name;
  out.smooth_param = 1.0;

  std::vector<Vec3> pos;
  std::vector<TriangleSpec> tris;
  auto add_vertex = [&](double theta, double phi) {
    out.chart_uv.emplace_back(theta, phi);
    pos.push_back(smooth.position(Vec2(theta, phi)));
    return static_cast<int>(pos.size()) - 1;
  };

  const int north = add_vertex(0.0, 0.0);
  std::vector<Ring> rings(sch.ring_size.size());
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const int n = sch.ring_size[i];
    const double theta = (static_cast<double>(i) + 1.0) * kPi / sch.layers;
    for (int j = 0; j < n; ++j) {
      const double phi = kTwoPi * (j + sch.ring_phase[i]) / n;
      rings[i].id.push_back(add_vertex(theta, phi));
      rings[i].az.push_back(phi);
    }
  }
  const int south = add_vertex(kPi, 0.0);

  const Ring& first = rings.front();
  for (std::size_t j = 0; j < first.id.size(); ++j) {
    tris.push_back({north, first.id[j], first.id[(j + 1) % first.id.size()]});
  }
  for (std::size_t i = 0; i + 1 < rings.size(); ++i) merge_band(rings[i], rings[i + 1], tris);
  const Ring& last = rings.back();
  for (std::size_t j = 0; j < last.id.size(); ++j) {
    tris.push_back({last.id[j], south, last.id[(j + 1) % last.id.size()]});
  }

  out.embedded = embed_points(pos, tris);
  return out;
}

GeneratedSurface generate_cylinder_grid(double radius, int around, int rows) {
  if (!(radius > 0.0) || around < 3 || rows < 1) {
    throw InvalidInput("cylinder grid needs radius > 0, around >= 3, rows >= 1");
  }
  GeneratedSurface out;
  out.smooth_name = "cylinder";
  out.smooth_param = radius;

  const double step = kTwoPi * radius / around;  // square cells
  std::vector<Vec3> pos;
  for (int j = 0; j <= rows; ++j) {
    for (int i = 0; i < around; ++i) {
      const double u = kTwoPi * i / around;
      out.chart_uv.emplace_back(u, j * step);
      pos.emplace_back(radius * std::cos(u), radius * std::sin(u), j * step);
    }
  }
  auto id = [&](int i, int j) { return j * around + (i % around); };
  std::vector<TriangleSpec> tris;
  for (int j = 0; j < rows; ++j) {
    for (int i = 0; i < around; ++i) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  out.embedded = embed_points(pos, tris);
  return out;
}

SurfaceSampling sampling_from_embedded(const EmbeddedSurface& es) {
  std::vector<Vec3> normals(es.positions.size());
  for (std::size_t v = 0; v < normals.size(); ++v) {
    normals[v] = es.vertex_normal(static_cast<int>(v));
  }
  return sampling_from_embedded(es, normals);
}

SurfaceSampling sampling_from_embedded(const EmbeddedSurface& es,
                                       const std::vector<Vec3>& vertex_normals) {
  if (vertex_normals.size() != es.positions.size()) {
    throw InvalidInput("one normal per vertex required");
  }
  SurfaceSampling s;
  s.surf = es.surface;
  s.position = es.positions;
  s.normal = vertex_normals;
  s.corner.reserve(s.surf.triangle_count());
  for (const auto& t : s.surf.triangles()) {
    s.corner.push_back({es.positions[t.v[0]], es.positions[t.v[1]], es.positions[t.v[2]]});
  }
  s.edge_endpoint.reserve(s.surf.edge_count());
  for (const auto& e : s.surf.edges()) {
    s.edge_endpoint.push_back({es.positions[e.u], es.positions[e.v]});
  }
  return s;
}

GowdyGrid generate_gowdy_grid(GridKind kind, int blocks, GeodesicSolver& solver, int columns) {
  if (blocks < 3 || columns < 3) {
    throw InvalidInput("grid quotient needs blocks >= 3 and columns >= 3");
  }
  GowdyGrid g;
  g.kind = kind;
  g.blocks = blocks;
  g.columns = columns;
  g.spacing = 6.0 / blocks;  // `blocks` steps of step_b climb one z-period

  const Vec3 va(0.0, 1.0, 0.0);
  const Vec3 vb = (kind == GridKind::rectangular) ? Vec3(-1.0 / 3.0, 0.0, kPi / 3.0)
                                                  : Vec3(-1.0 / 3.0, -2.0 / 9.0, kPi / 3.0);
  g.step_a = g.spacing * va;
  g.step_b = g.spacing * vb;
  const Vec3& sa = g.step_a;
  const Vec3& sb = g.step_b;
  const AmbientMetric& metric = solver.metric();

  auto id = [&](int i, int j) { return ((i % blocks + blocks) % blocks) * columns + ((j % columns + columns) % columns); };
  const int nv = blocks * columns;
  g.sampling.position.resize(nv);
  g.sampling.normal.resize(nv);
  g.chart_uv.resize(nv);
  for (int i = 0; i < blocks; ++i) {
    for (int j = 0; j < columns; ++j) {
      const Vec3 p = i * sb + j * sa;
      g.sampling.position[id(i, j)] = p;
      g.sampling.normal[id(i, j)] = metric.normalized(p, metric_cross(metric, p, va, vb));
      // Chart frame uses the rectangular step pair; the skew step is
      // step_b_rect - (2/9) step_a, absorbed into the first coordinate.
      const double u = (kind == GridKind::rectangular) ? g.spacing * j
                                                       : g.spacing * (j - 2.0 * i / 9.0);
      g.chart_uv[id(i, j)] = Vec2(u, g.spacing * i);
    }
  }

  std::vector<EdgeSpec> edges;
  std::vector<TriangleSpec> tris;
  for (int i = 0; i < blocks; ++i) {
    for (int j = 0; j < columns; ++j) {
      const Vec3 p = i * sb + j * sa;
      const Vec3 qa = p + sa, qb = p + sb, qc = p + sa + sb;
      edges.push_back({id(i, j), id(i, j + 1), solver.distance(p, qa)});
      g.edge_type.push_back(0);
      g.sampling.edge_endpoint.push_back({p, qa});
      edges.push_back({id(i, j), id(i + 1, j), solver.distance(p, qb)});
      g.edge_type.push_back(1);
      g.sampling.edge_endpoint.push_back({p, qb});
      edges.push_back({id(i, j), id(i + 1, j + 1), solver.distance(p, qc)});
      g.edge_type.push_back(2);
      g.sampling.edge_endpoint.push_back({p, qc});

      tris.push_back({id(i, j), id(i + 1, j + 1), id(i + 1, j)});
      g.sampling.corner.push_back({p, qc, qb});
      tris.push_back({id(i, j), id(i, j + 1), id(i + 1, j + 1)});
      g.sampling.corner.push_back({p, qa, qc});
    }
  }
  g.sampling.surf = SimplicialSurface::build(nv, edges, tris);
  return g;
}

}  // namespace pfcurv
