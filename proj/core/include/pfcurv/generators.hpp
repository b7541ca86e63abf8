#pragma once

#include <array>
#include <string>
#include <vector>

#include "pfcurv/embedding.hpp"
#include "pfcurv/geodesic.hpp"
#include "pfcurv/geometry.hpp"
#include "pfcurv/surface.hpp"

namespace pfcurv {

// Ring profile for the sphere-type triangulations: ring k holds 6k vertices
// for k = 1..m with m = (layers+2)/4, a plateau of (layers-2m+1) rings of 6m
// vertices spans the equator, and the profile mirrors to the other pole.
// Valid layer counts are 6, 10, 14, 18, 22.
struct SphereScheme {
  int layers = 0;
  std::vector<int> ring_size;     // one entry per interior latitude
  std::vector<double> ring_phase; // azimuthal offset in units of one step
};
SphereScheme sphere_scheme(int layers);

// Triangulated sample of a smooth surface. Vertices sit exactly on the
// surface; chart_uv holds their chart coordinates for reference lookups.
struct GeneratedSurface {
  EmbeddedSurface embedded;
  std::vector<Vec2> chart_uv;
  std::string smooth_name;
  double smooth_param = 1.0;
};

// Sphere-type triangulation of a radial surface (modified-sphere, peanut or
// round-sphere) with uniform colatitude spacing and alternating ring phases.
// Triangles wind counterclockwise seen from outside. Throws
// UnsupportedLayerCount unless layers is one of 6, 10, 14, 18, 22.
GeneratedSurface generate_layered_surface(const std::string& name, int layers);

// Tube of square cells: `around` vertices per ring, `rows` bands of quads,
// each quad split along its diagonal. The axial step equals the
// circumferential step; the two end rings are boundary.
GeneratedSurface generate_cylinder_grid(double radius, int around, int rows);

// Simplicial surface paired with ambient data for layer construction over a
// curved metric. Corner positions are stored per triangle so that meshes
// built as quotients can place each corner with the deck translation its
// triangle needs; edge endpoint positions follow the edge's (u, v) order.
struct SurfaceSampling {
  SimplicialSurface surf;
  std::vector<Vec3> position;                // one representative per vertex
  std::vector<Vec3> normal;                  // g-unit, toward the positive side
  std::vector<std::array<Vec3, 3>> corner;   // per triangle, seam resolved
  std::vector<std::array<Vec3, 2>> edge_endpoint;  // per edge, seam resolved
};

// Euclidean sampling of an embedded surface; normals default to the
// area-weighted vertex normals of the embedding.
SurfaceSampling sampling_from_embedded(const EmbeddedSurface& es);
SurfaceSampling sampling_from_embedded(const EmbeddedSurface& es,
                                       const std::vector<Vec3>& vertex_normals);

enum class GridKind { rectangular, skew };

// Tilted-plane grid in the Gowdy chart, quotiented to a torus spanning one
// z-period. Edge types: 0 along step_a, 1 along step_b, 2 along the cell
// diagonal step_a + step_b.
struct GowdyGrid {
  SurfaceSampling sampling;
  GridKind kind = GridKind::rectangular;
  int blocks = 0;
  int columns = 0;
  double spacing = 1.0;  // scale of the base step vectors
  Vec3 step_a, step_b;
  std::vector<int> edge_type;
  std::vector<Vec2> chart_uv;  // tilted-plane chart coordinates per vertex
};

// Builds the grid with `blocks` steps over one z-period (step vectors scaled
// by 6/blocks) and `columns` transverse columns. Intrinsic edge lengths are
// ambient geodesic distances computed through the solver, whose cache
// collapses congruent edges to one solve per row and type.
GowdyGrid generate_gowdy_grid(GridKind kind, int blocks, GeodesicSolver& solver,
                              int columns = 3);

}  // namespace pfcurv
