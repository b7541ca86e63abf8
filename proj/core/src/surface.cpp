#include "pfcurv/surface.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "pfcurv/geometry.hpp"

namespace pfcurv {

namespace {

std::pair<int, int> key(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

}  // namespace

std::optional<int> SimplicialSurface::find_edge(int u, int v) const {
  for (int e : vertex_edges_[u]) {
    if (edges_[e].u + edges_[e].v == u + v &&
        (edges_[e].u == u || edges_[e].u == v)) {
      return e;
    }
  }
  return std::nullopt;
}

int SimplicialSurface::corner_index(int t, int v) const {
  const auto& tv = tris_[t].v;
  for (int i = 0; i < 3; ++i) {
    if (tv[i] == v) return i;
  }
  throw InvalidInput("vertex " + std::to_string(v) + " not in triangle " + std::to_string(t));
}

int SimplicialSurface::opposite_vertex(int t, int e) const {
  for (int i = 0; i < 3; ++i) {
    if (tris_[t].e[i] == e) return tris_[t].v[(i + 2) % 3];
  }
  throw InvalidInput("edge " + std::to_string(e) + " not in triangle " + std::to_string(t));
}

double SimplicialSurface::corner_angle(int t, int v) const {
  const int i = corner_index(t, v);
  const double here1 = edges_[tris_[t].e[i]].length;          // v -> next
  const double here2 = edges_[tris_[t].e[(i + 2) % 3]].length;  // prev -> v
  const double opp = edges_[tris_[t].e[(i + 1) % 3]].length;
  return angle_between_sides(here1, here2, opp);
}

double SimplicialSurface::triangle_area(int t) const {
  return pfcurv::triangle_area(edges_[tris_[t].e[0]].length, edges_[tris_[t].e[1]].length,
                               edges_[tris_[t].e[2]].length);
}

double SimplicialSurface::total_area() const {
  double s = 0.0;
  for (int t = 0; t < triangle_count(); ++t) s += triangle_area(t);
  return s;
}

double SimplicialSurface::mean_edge_length() const {
  double s = 0.0;
  for (const Edge& e : edges_) s += e.length;
  return s / static_cast<double>(edges_.size());
}

SimplicialSurface SimplicialSurface::build(int vertex_count, const std::vector<EdgeSpec>& edges,
                                           const std::vector<TriangleSpec>& triangles) {
  SimplicialSurface s;
  s.nv_ = vertex_count;
  if (vertex_count <= 0) throw InvalidInput("vertex count must be positive");

  std::map<std::pair<int, int>, int> edge_index;
  s.edges_.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& es = edges[i];
    if (es.u < 0 || es.u >= vertex_count || es.v < 0 || es.v >= vertex_count || es.u == es.v) {
      throw InvalidInput("bad edge endpoints at edge " + std::to_string(i));
    }
    if (!(es.length > 0.0) || !std::isfinite(es.length)) {
      throw InvalidInput("nonpositive length at edge " + std::to_string(i));
    }
    if (!edge_index.emplace(key(es.u, es.v), static_cast<int>(i)).second) {
      throw InvalidInput("duplicate edge " + std::to_string(es.u) + "-" + std::to_string(es.v));
    }
    s.edges_.push_back(Edge{es.u, es.v, es.length, -1, -1});
  }

  s.tris_.reserve(triangles.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const TriangleSpec& ts = triangles[t];
    const std::array<int, 3> v{ts.a, ts.b, ts.c};
    if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) {
      throw InvalidInput("repeated vertex in triangle " + std::to_string(t));
    }
    Triangle tri;
    tri.v = v;
    for (int i = 0; i < 3; ++i) {
      const int a = v[i], b = v[(i + 1) % 3];
      const auto it = edge_index.find(key(a, b));
      if (it == edge_index.end()) {
        throw InvalidInput("triangle " + std::to_string(t) + " references missing edge " +
                           std::to_string(a) + "-" + std::to_string(b));
      }
      tri.e[i] = it->second;
      Edge& e = s.edges_[it->second];
      int& slot = (e.u == a) ? e.tri_forward : e.tri_backward;
      if (slot >= 0) {
        // Two triangles traversing the edge the same way: either a third
        // triangle on the edge or an orientation flip.
        const int other = (e.u == a) ? e.tri_backward : e.tri_forward;
        if (other >= 0) throw NonManifoldEdge(it->second);
        throw InconsistentOrientation(it->second);
      }
      slot = static_cast<int>(t);
    }
    const double la = s.edges_[tri.e[0]].length;
    const double lb = s.edges_[tri.e[1]].length;
    const double lc = s.edges_[tri.e[2]].length;
    if (la + lb <= lc || lb + lc <= la || lc + la <= lb) {
      throw TriangleInequalityViolated(static_cast<int>(t));
    }
    s.tris_.push_back(tri);
  }

  for (std::size_t e = 0; e < s.edges_.size(); ++e) {
    if (s.edges_[e].tri_forward < 0 && s.edges_[e].tri_backward < 0) {
      throw InvalidInput("edge " + std::to_string(e) + " belongs to no triangle");
    }
  }

  s.vertex_edges_.assign(vertex_count, {});
  for (std::size_t e = 0; e < s.edges_.size(); ++e) {
    s.vertex_edges_[s.edges_[e].u].push_back(static_cast<int>(e));
    s.vertex_edges_[s.edges_[e].v].push_back(static_cast<int>(e));
  }

  // Counterclockwise star order. In a triangle rotated to (v, a, b) the walk
  // leaves through edge (v, b); the neighbor there traverses (v, b) forward.
  s.star_tris_.assign(vertex_count, {});
  s.vertex_interior_.assign(vertex_count, false);
  std::vector<std::vector<int>> incident(vertex_count);
  for (int t = 0; t < s.triangle_count(); ++t) {
    for (int i = 0; i < 3; ++i) incident[s.tris_[t].v[i]].push_back(t);
  }
  // In a triangle rotated to (v, a, b) the counterclockwise walk around v
  // leaves through edge (v, b) into the triangle traversing it v -> b.
  auto next_ccw = [&s](int v, int t) -> int {
    const int i = s.corner_index(t, v);
    const Edge& e = s.edges_[s.tris_[t].e[(i + 2) % 3]];  // joins v and b
    return (e.u == v) ? e.tri_forward : e.tri_backward;
  };
  auto prev_ccw = [&s](int v, int t) -> int {
    const int i = s.corner_index(t, v);
    const Edge& e = s.edges_[s.tris_[t].e[i]];  // joins v and a
    return (e.u == v) ? e.tri_backward : e.tri_forward;
  };
  for (int v = 0; v < vertex_count; ++v) {
    if (incident[v].empty()) {
      throw InvalidInput("isolated vertex " + std::to_string(v));
    }
    const int start = incident[v][0];
    const int limit = static_cast<int>(incident[v].size()) + 1;
    // Rewind to the clockwise-most triangle; stops after one lap if closed.
    int cur = start;
    int guard = 0;
    while (true) {
      const int p = prev_ccw(v, cur);
      if (p < 0 || p == start) break;
      cur = p;
      if (++guard > limit) throw NonManifoldEdge(s.tris_[cur].e[0]);
    }
    std::vector<int>& ring = s.star_tris_[v];
    int walk = cur;
    guard = 0;
    while (walk >= 0) {
      ring.push_back(walk);
      const int n = next_ccw(v, walk);
      if (n == cur || n < 0) break;
      walk = n;
      if (++guard > limit) throw NonManifoldEdge(s.tris_[walk].e[0]);
    }
    if (ring.size() != incident[v].size()) {
      // Fan does not cover the incidence set: pinched vertex.
      throw NonManifoldEdge(s.tris_[ring.back()].e[0]);
    }
    s.vertex_interior_[v] = next_ccw(v, ring.back()) == ring.front();
  }

  s.closed_ = true;
  for (const Edge& e : s.edges_) {
    if (e.tri_forward < 0 || e.tri_backward < 0) {
      s.closed_ = false;
      break;
    }
  }
  return s;
}

}  // namespace pfcurv
