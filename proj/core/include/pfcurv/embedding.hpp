#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pfcurv/geometry.hpp"
#include "pfcurv/hinge.hpp"
#include "pfcurv/surface.hpp"

namespace pfcurv {

// Simplicial surface together with vertex positions in Euclidean 3-space.
// Intrinsic edge lengths are the chord lengths; triangle normals follow the
// right-hand rule on the oriented vertex cycle.
struct EmbeddedSurface {
  SimplicialSurface surface;
  std::vector<Vec3> positions;
  std::vector<Vec3> triangle_normals;

  // Area-weighted average of incident triangle normals, normalized.
  Vec3 vertex_normal(int v) const;
  double triangle_area3(int t) const;
};

// Builds the complex from positions and oriented triangles; the edge set is
// derived (unique unordered pairs, sorted) and lengths are chords.
EmbeddedSurface embed_points(const std::vector<Vec3>& positions,
                             const std::vector<TriangleSpec>& triangles);

// Attaches positions to an existing complex after checking that every stored
// edge length matches the chord within 1e-9 relative.
EmbeddedSurface embed_on(const SimplicialSurface& s, const std::vector<Vec3>& positions);

// Signed hinge angle at every interior edge from adjacent triangle normals:
// |phi| is the angle between the normals; the sign is positive exactly when
// the wedge swept from one triangle to the other through the side the
// normals point away from exceeds pi (concave). Throws DegenerateHinge when
// the normals are antiparallel within 1e-9.
HingeField hinge_angles_euclidean(const EmbeddedSurface& es);

// Limited OFF support: triangles only.
EmbeddedSurface read_off(std::istream& in);
EmbeddedSurface read_off(const std::string& path);
void write_off(const EmbeddedSurface& es, std::ostream& out);
void write_off(const EmbeddedSurface& es, const std::string& path);

}  // namespace pfcurv
