#pragma once

#include <array>
#include <vector>

#include "pfcurv/geometry.hpp"
#include "pfcurv/surface.hpp"

namespace pfcurv {

enum class DualKind { voronoi, barycentric };

// Dual cells realized as per-triangle corner fragments in each triangle's
// intrinsic frame (vertex 0 at the origin, vertex 1 on the positive x-axis,
// vertex 2 above). Both kinds cut every edge at its midpoint, so the cell of
// vertex i inside a triangle is the polygon
//   [corner_i, following edge midpoint, center, preceding edge midpoint]
// with center the circumcenter (voronoi) or the barycenter.
class DualTessellation {
 public:
  struct TriangleFragments {
    std::array<Vec2, 3> frame;                 // intrinsic corner positions
    Vec2 center;                               // circumcenter / barycenter used
    std::array<std::vector<Vec2>, 3> corner;   // fragment polygon per corner
  };

  DualKind kind() const { return kind_; }
  bool mixed_fallback() const { return mixed_fallback_; }
  int fallback_count() const { return fallback_count_; }

  double vertex_area(int v) const { return vertex_area_[v]; }
  const std::vector<double>& vertex_areas() const { return vertex_area_; }
  // Length of edge e claimed by the cell of its endpoint u resp. v; always
  // half the edge length for these center choices.
  std::array<double, 2> edge_split(int e) const { return {0.5 * s_->length(e), 0.5 * s_->length(e)}; }
  const TriangleFragments& fragments(int t) const { return frags_[t]; }
  const SimplicialSurface& surface() const { return *s_; }

  friend DualTessellation build_dual(const SimplicialSurface& s, DualKind kind,
                                     bool mixed_fallback);

 private:
  const SimplicialSurface* s_ = nullptr;
  DualKind kind_ = DualKind::voronoi;
  bool mixed_fallback_ = true;
  int fallback_count_ = 0;
  std::vector<double> vertex_area_;
  std::vector<TriangleFragments> frags_;
};

// Builds the dual tessellation. For kind voronoi with mixed_fallback off,
// throws NotDelaunay when a circumcenter is not strictly interior; with the
// fallback on, such a circumcenter is clamped to the midpoint of the edge
// opposite the obtuse corner (which reproduces the familiar mixed-area
// cells).
DualTessellation build_dual(const SimplicialSurface& s, DualKind kind,
                            bool mixed_fallback = true);

// True when every triangle's circumcenter lies strictly inside it.
bool is_intrinsically_delaunay(const SimplicialSurface& s);

}  // namespace pfcurv
