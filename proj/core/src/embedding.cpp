#include "pfcurv/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "pfcurv/errors.hpp"

namespace pfcurv {

namespace {

std::vector<Vec3> normals_of(const SimplicialSurface& s, const std::vector<Vec3>& pos) {
  std::vector<Vec3> n(s.triangle_count());
  for (int t = 0; t < s.triangle_count(); ++t) {
    const auto& tv = s.triangle(t).v;
    const Vec3 cr = (pos[tv[1]] - pos[tv[0]]).cross(pos[tv[2]] - pos[tv[0]]);
    const double len = cr.norm();
    if (!(len > 0.0)) throw InvalidInput("zero-area triangle " + std::to_string(t));
    n[t] = cr / len;
  }
  return n;
}

}  // namespace

Vec3 EmbeddedSurface::vertex_normal(int v) const {
  Vec3 n = Vec3::Zero();
  for (int t : surface.star(v)) n += triangle_area3(t) * triangle_normals[t];
  const double len = n.norm();
  if (!(len > 0.0)) throw NumericalError("degenerate vertex normal at " + std::to_string(v));
  return n / len;
}

double EmbeddedSurface::triangle_area3(int t) const {
  const auto& tv = surface.triangle(t).v;
  return 0.5 * (positions[tv[1]] - positions[tv[0]])
             .cross(positions[tv[2]] - positions[tv[0]])
             .norm();
}

EmbeddedSurface embed_points(const std::vector<Vec3>& positions,
                             const std::vector<TriangleSpec>& triangles) {
  std::map<std::pair<int, int>, double> edge_set;
  for (const auto& t : triangles) {
    const int v[4] = {t.a, t.b, t.c, t.a};
    for (int i = 0; i < 3; ++i) {
      const int a = std::min(v[i], v[i + 1]);
      const int b = std::max(v[i], v[i + 1]);
      edge_set.emplace(std::make_pair(a, b), (positions[a] - positions[b]).norm());
    }
  }
  std::vector<EdgeSpec> edges;
  edges.reserve(edge_set.size());
  for (const auto& [k, len] : edge_set) edges.push_back(EdgeSpec{k.first, k.second, len});

  EmbeddedSurface es;
  es.surface = SimplicialSurface::build(static_cast<int>(positions.size()), edges, triangles);
  es.positions = positions;
  es.triangle_normals = normals_of(es.surface, positions);
  return es;
}

EmbeddedSurface embed_on(const SimplicialSurface& s, const std::vector<Vec3>& positions) {
  if (static_cast<int>(positions.size()) != s.vertex_count()) {
    throw InvalidInput("position count does not match vertex count");
  }
  for (int e = 0; e < s.edge_count(); ++e) {
    const auto& ed = s.edge(e);
    const double chord = (positions[ed.u] - positions[ed.v]).norm();
    if (std::abs(chord - ed.length) > 1e-9 * std::max(1.0, ed.length)) {
      throw InvalidInput("edge " + std::to_string(e) + " length disagrees with chord");
    }
  }
  EmbeddedSurface es;
  es.surface = s;
  es.positions = positions;
  es.triangle_normals = normals_of(s, positions);
  return es;
}

HingeField hinge_angles_euclidean(const EmbeddedSurface& es) {
  const SimplicialSurface& s = es.surface;
  HingeField f;
  f.source = HingeField::Source::euclidean_normals;
  f.angle.assign(s.edge_count(), std::numeric_limits<double>::quiet_NaN());
  f.valid.assign(s.edge_count(), false);
  constexpr double pi = 3.14159265358979323846;
  for (int e = 0; e < s.edge_count(); ++e) {
    if (!s.edge_is_interior(e)) continue;
    const auto& ed = s.edge(e);
    const Vec3& na = es.triangle_normals[ed.tri_forward];
    const Vec3& nb = es.triangle_normals[ed.tri_backward];
    const Vec3 ehat = (es.positions[ed.v] - es.positions[ed.u]).normalized();
    // Equivalent to comparing the positive-side wedge against pi, but exact
    // near zero: the edge direction comes from the forward triangle's
    // traversal and the value is unchanged under swapping the two triangles.
    const double phi = -std::atan2(na.cross(nb).dot(ehat), na.dot(nb));
    if (pi - std::abs(phi) < 1e-9) throw DegenerateHinge(e);
    f.angle[e] = phi;
    f.valid[e] = true;
  }
  return f;
}

EmbeddedSurface read_off(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto pos = line.find_first_not_of(" \t");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return std::istringstream(line);
    }
    throw IoError("unexpected end of OFF file at line " + std::to_string(lineno));
  };

  {
    auto hdr = next_line();
    std::string magic;
    hdr >> magic;
    if (magic != "OFF") throw IoError("not an OFF file");
  }
  int nv = 0, nf = 0, ne = 0;
  {
    auto counts = next_line();
    if (!(counts >> nv >> nf >> ne)) throw IoError("bad OFF count line");
  }
  std::vector<Vec3> pos(nv);
  for (int i = 0; i < nv; ++i) {
    auto ls = next_line();
    if (!(ls >> pos[i].x() >> pos[i].y() >> pos[i].z())) {
      throw IoError("bad vertex on line " + std::to_string(lineno));
    }
  }
  std::vector<TriangleSpec> tris(nf);
  for (int i = 0; i < nf; ++i) {
    auto ls = next_line();
    int k = 0;
    if (!(ls >> k >> tris[i].a >> tris[i].b >> tris[i].c) || k != 3) {
      throw IoError("non-triangular face on line " + std::to_string(lineno));
    }
  }
  return embed_points(pos, tris);
}

EmbeddedSurface read_off(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  return read_off(f);
}

void write_off(const EmbeddedSurface& es, std::ostream& out) {
  out << "OFF\n";
  out << es.surface.vertex_count() << ' ' << es.surface.triangle_count() << ' '
      << es.surface.edge_count() << '\n';
  char buf[128];
  for (const Vec3& p : es.positions) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g %.17g\n", p.x(), p.y(), p.z());
    out << buf;
  }
  for (const auto& t : es.surface.triangles()) {
    out << "3 " << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
  }
}

void write_off(const EmbeddedSurface& es, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  write_off(es, f);
  if (!f.good()) throw IoError("write failed: " + path);
}

}  // namespace pfcurv
