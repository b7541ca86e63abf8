#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pfcurv/errors.hpp"

namespace pfcurv {

struct EdgeSpec {
  int u, v;
  double length;
};

struct TriangleSpec {
  int a, b, c;
};

// Piecewise flat surface: topology plus one length per edge. Positions never
// enter; everything downstream works from lengths and adjacency alone.
class SimplicialSurface {
 public:
  struct Edge {
    int u, v;        // u < v after normalization? no: as given, u != v
    double length;
    int tri_forward = -1;   // triangle traversing u -> v
    int tri_backward = -1;  // triangle traversing v -> u
  };

  struct Triangle {
    std::array<int, 3> v;  // oriented vertex cycle
    std::array<int, 3> e;  // e[i] joins v[i] and v[(i+1)%3]
  };

  SimplicialSurface() = default;

  int vertex_count() const { return nv_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int triangle_count() const { return static_cast<int>(tris_.size()); }

  const Edge& edge(int e) const { return edges_[e]; }
  const Triangle& triangle(int t) const { return tris_[t]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Triangle>& triangles() const { return tris_; }

  double length(int e) const { return edges_[e].length; }
  std::optional<int> find_edge(int u, int v) const;

  bool edge_is_interior(int e) const {
    return edges_[e].tri_forward >= 0 && edges_[e].tri_backward >= 0;
  }
  bool vertex_is_interior(int v) const { return vertex_interior_[v]; }
  bool is_closed() const { return closed_; }
  int euler_characteristic() const {
    return nv_ - edge_count() + triangle_count();
  }

  // Triangles incident to v in counterclockwise order (the surface
  // orientation fixes the sense). Cyclic for an interior vertex; for a
  // boundary vertex the chain starts at the clockwise-most triangle.
  const std::vector<int>& star(int v) const { return star_tris_[v]; }
  // Edges incident to v, unordered.
  const std::vector<int>& vertex_edges(int v) const { return vertex_edges_[v]; }

  // Index of vertex v within triangle t's cycle (0..2).
  int corner_index(int t, int v) const;
  // Vertex of t not on edge e.
  int opposite_vertex(int t, int e) const;
  // Interior angle of triangle t at vertex v, from the three lengths.
  double corner_angle(int t, int v) const;
  double triangle_area(int t) const;
  double total_area() const;
  double mean_edge_length() const;

  // Validates lengths, the triangle inequality, edge manifoldness and
  // orientation consistency, then builds adjacency.
  static SimplicialSurface build(int vertex_count, const std::vector<EdgeSpec>& edges,
                                 const std::vector<TriangleSpec>& triangles);

 private:
  int nv_ = 0;
  std::vector<Edge> edges_;
  std::vector<Triangle> tris_;
  std::vector<std::vector<int>> star_tris_;
  std::vector<std::vector<int>> vertex_edges_;
  std::vector<bool> vertex_interior_;
  bool closed_ = true;
};

}  // namespace pfcurv
