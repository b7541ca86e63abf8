#pragma once

#include <map>
#include <vector>

#include "pfcurv/geometry.hpp"
#include "pfcurv/surface.hpp"

namespace pfcurv {

struct PlacedTriangle2 {
  int tri;
  std::array<Vec2, 3> p;  // p[i] places triangle(tri).v[i]
};

struct PlacedEdge {
  int edge;
  Vec2 a, b;     // a places edge.u, b places edge.v
  double theta;  // acute angle between the edge's line and the x-axis
};

// Flat development of a group of triangles. Unfolding preserves each
// triangle's intrinsic shape; distinct unfolding paths may place a shared
// edge in two ways (a seam), in which case both instances are kept.
struct Development {
  int base_edge = -1;
  int center_vertex = -1;
  double cumulative_angle = 0.0;  // fans: total interior angle at the center
  std::vector<PlacedTriangle2> triangles;
  std::vector<PlacedEdge> edges;
  std::map<int, int> triangle_index;  // triangle id -> index into triangles

  const PlacedTriangle2& placement(int tri) const { return triangles[triangle_index.at(tri)]; }
};

// Lays out the full triangle fan around an interior vertex, starting with
// start_edge along the positive x-axis and proceeding counterclockwise.
// Throws OpenFan if the vertex is on the boundary.
Development develop_fan(const SimplicialSurface& s, int center_vertex, int start_edge);

// Lays out star(u) and star(v) of an interior hinge (u,v) with the hinge on
// the x-axis from (0,0) to (|h|,0) and the forward triangle above it. The
// remaining triangles unfold outward from the two hinge triangles in both
// rotational directions around each endpoint, so any development seam lands
// rotationally opposite the hinge.
Development develop_strip(const SimplicialSurface& s, int hinge_edge);

}  // namespace pfcurv
