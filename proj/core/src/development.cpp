#include "pfcurv/development.hpp"

#include <cmath>

namespace pfcurv {

namespace {

double line_angle(const Vec2& a, const Vec2& b) {
  const Vec2 d = b - a;
  return std::atan2(std::abs(d.y()), std::abs(d.x()));
}

void record_edge(Development& dev, const SimplicialSurface& s, int edge, const Vec2& pu,
                 const Vec2& pv, double scale) {
  const double tol = 1e-9 * scale;
  for (const PlacedEdge& pe : dev.edges) {
    if (pe.edge == edge && (pe.a - pu).norm() <= tol && (pe.b - pv).norm() <= tol) {
      return;  // same placement reached along another unfolding path
    }
  }
  (void)s;
  dev.edges.push_back(PlacedEdge{edge, pu, pv, line_angle(pu, pv)});
}

void record_triangle(Development& dev, const SimplicialSurface& s, int tri,
                     const std::array<Vec2, 3>& p, double scale) {
  dev.triangle_index.emplace(tri, static_cast<int>(dev.triangles.size()));
  dev.triangles.push_back(PlacedTriangle2{tri, p});
  const auto& t = s.triangle(tri);
  for (int i = 0; i < 3; ++i) {
    const auto& e = s.edge(t.e[i]);
    const Vec2& pu = (e.u == t.v[i]) ? p[i] : p[(i + 1) % 3];
    const Vec2& pv = (e.u == t.v[i]) ? p[(i + 1) % 3] : p[i];
    record_edge(dev, s, t.e[i], pu, pv, scale);
  }
}

// Places triangle `tri` across the edge joining vertices a and b (already at
// pa, pb), putting its third vertex on the opposite side from `away`.
std::array<Vec2, 3> unfold_across(const SimplicialSurface& s, int tri, int a, int b,
                                  const Vec2& pa, const Vec2& pb, const Vec2& away) {
  const auto& t = s.triangle(tri);
  int c = -1;
  for (int i = 0; i < 3; ++i) {
    if (t.v[i] != a && t.v[i] != b) c = t.v[i];
  }
  const int ea = *s.find_edge(a, c);
  const int eb = *s.find_edge(b, c);
  const double r1 = s.length(ea);
  const double r2 = s.length(eb);
  const Vec2 d = pb - pa;
  const double L = d.norm();
  const double x = (r1 * r1 - r2 * r2 + L * L) / (2.0 * L);
  const double h2 = r1 * r1 - x * x;
  const double h = std::sqrt(std::max(0.0, h2));
  const Vec2 dir = d / L;
  const Vec2 n(-dir.y(), dir.x());
  const double side = n.dot(away - pa);
  const Vec2 pc = pa + x * dir + (side > 0.0 ? -h : h) * n;
  std::array<Vec2, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i] = (t.v[i] == a) ? pa : (t.v[i] == b) ? pb : pc;
  }
  return out;
}

int other_endpoint(const SimplicialSurface::Edge& e, int v) { return e.u == v ? e.v : e.u; }

// Triangle adjacent to `tri` across the star edge of v left behind by a
// counterclockwise step (see surface.cpp); negative when on the boundary.
int next_ccw(const SimplicialSurface& s, int v, int tri) {
  const int i = s.corner_index(tri, v);
  const auto& e = s.edge(s.triangle(tri).e[(i + 2) % 3]);
  return (e.u == v) ? e.tri_forward : e.tri_backward;
}

int prev_ccw(const SimplicialSurface& s, int v, int tri) {
  const int i = s.corner_index(tri, v);
  const auto& e = s.edge(s.triangle(tri).e[i]);
  return (e.u == v) ? e.tri_backward : e.tri_forward;
}

// Common edge of two triangles incident to v.
int shared_star_edge(const SimplicialSurface& s, int v, int t0, int t1) {
  const auto& a = s.triangle(t0);
  const auto& b = s.triangle(t1);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (a.e[i] == b.e[j]) {
        const auto& e = s.edge(a.e[i]);
        if (e.u == v || e.v == v) return a.e[i];
      }
    }
  }
  throw InvalidInput("triangles share no star edge");
}

struct Walk {
  std::vector<int> tris;  // successive unplaced star triangles
};

Walk collect(const SimplicialSurface& s, int v, int from, int stop, bool forward) {
  Walk w;
  int cur = from;
  const int limit = s.triangle_count() + 1;
  int guard = 0;
  while (true) {
    const int n = forward ? next_ccw(s, v, cur) : prev_ccw(s, v, cur);
    if (n < 0 || n == stop) break;
    w.tris.push_back(n);
    cur = n;
    if (++guard > limit) throw NonManifoldEdge(s.triangle(cur).e[0]);
  }
  return w;
}

// Unfolds a sequence of star triangles of v, each across the edge it shares
// with its predecessor.
void place_walk(Development& dev, const SimplicialSurface& s, int v, int seed,
                const std::vector<int>& walk, std::size_t count, double scale) {
  int prev = seed;
  for (std::size_t k = 0; k < count; ++k) {
    const int tri = walk[k];
    const int e = shared_star_edge(s, v, prev, tri);
    const auto& edge = s.edge(e);
    const auto& placed = dev.placement(prev);
    const auto& pt = s.triangle(prev);
    Vec2 pa, pb, away;
    for (int i = 0; i < 3; ++i) {
      if (pt.v[i] == edge.u) pa = placed.p[i];
      if (pt.v[i] == edge.v) pb = placed.p[i];
      if (pt.v[i] != edge.u && pt.v[i] != edge.v) away = placed.p[i];
    }
    record_triangle(dev, s, tri, unfold_across(s, tri, edge.u, edge.v, pa, pb, away), scale);
    prev = tri;
  }
}

}  // namespace pfcurv::(anonymous)

Development develop_fan(const SimplicialSurface& s, int center_vertex, int start_edge) {
  const auto& e0 = s.edge(start_edge);
  if (e0.u != center_vertex && e0.v != center_vertex) {
    throw InvalidInput("start edge not incident to the fan center");
  }
  if (!s.vertex_is_interior(center_vertex)) throw OpenFan(center_vertex);

  Development dev;
  dev.center_vertex = center_vertex;
  const int w0 = other_endpoint(e0, center_vertex);
  // First triangle: the one whose counterclockwise wedge starts at (v, w0).
  const int t0 = (e0.u == center_vertex) ? e0.tri_forward : e0.tri_backward;
  const double scale = s.length(start_edge);

  double cursor = 0.0;
  int tri = t0;
  const int n = static_cast<int>(s.star(center_vertex).size());
  for (int k = 0; k < n; ++k) {
    const int i = s.corner_index(tri, center_vertex);
    const auto& t = s.triangle(tri);
    const int a = t.v[(i + 1) % 3];
    const int b = t.v[(i + 2) % 3];
    const double la = s.length(*s.find_edge(center_vertex, a));
    const double lb = s.length(*s.find_edge(center_vertex, b));
    const double alpha = s.corner_angle(tri, center_vertex);
    std::array<Vec2, 3> p;
    p[i] = Vec2(0.0, 0.0);
    p[(i + 1) % 3] = la * Vec2(std::cos(cursor), std::sin(cursor));
    p[(i + 2) % 3] = lb * Vec2(std::cos(cursor + alpha), std::sin(cursor + alpha));
    record_triangle(dev, s, tri, p, scale);
    cursor += alpha;
    tri = next_ccw(s, center_vertex, tri);
  }
  dev.cumulative_angle = cursor;
  return dev;
}

Development develop_strip(const SimplicialSurface& s, int hinge_edge) {
  const auto& h = s.edge(hinge_edge);
  if (!s.edge_is_interior(hinge_edge)) {
    throw InvalidInput("hinge " + std::to_string(hinge_edge) + " is a boundary edge");
  }
  const int u = h.u, v = h.v;
  const int A = h.tri_forward;   // traverses u -> v, placed above the axis
  const int B = h.tri_backward;  // traverses v -> u, placed below
  const double L = h.length;

  Development dev;
  dev.base_edge = hinge_edge;
  const Vec2 pu(0.0, 0.0), pv(L, 0.0);
  record_triangle(dev, s, A, unfold_across(s, A, u, v, pu, pv, Vec2(0.0, -1.0)), L);
  record_triangle(dev, s, B, unfold_across(s, B, u, v, pu, pv, Vec2(0.0, 1.0)), L);

  // Counterclockwise around u the ring runs ..., B, A, ...; around v it runs
  // ..., A, B, ... Split each ring's remaining triangles between the two
  // rotational directions so neither unfolding path exceeds half the ring.
  for (const int w : {u, v}) {
    const int fwd_seed = (w == u) ? A : B;
    const int bwd_seed = (w == u) ? B : A;
    const Walk fwd = collect(s, w, fwd_seed, bwd_seed, true);
    const Walk bwd = collect(s, w, bwd_seed, fwd_seed, false);
    if (s.vertex_is_interior(w)) {
      const std::size_t k = fwd.tris.size();
      const std::size_t nf = (k + 1) / 2;
      place_walk(dev, s, w, fwd_seed, fwd.tris, nf, L);
      place_walk(dev, s, w, bwd_seed, bwd.tris, k - nf, L);
    } else {
      place_walk(dev, s, w, fwd_seed, fwd.tris, fwd.tris.size(), L);
      place_walk(dev, s, w, bwd_seed, bwd.tris, bwd.tris.size(), L);
    }
  }
  return dev;
}

}  // namespace pfcurv
