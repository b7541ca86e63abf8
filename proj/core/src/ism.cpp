#include "pfcurv/ism.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "pfcurv/errors.hpp"

namespace pfcurv {

namespace {

void write_double(std::ostream& out, double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  out.write(buf, res.ptr - buf);
}

double parse_double(const std::string& tok, int line) {
  double x = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw IoError("bad number '" + tok + "' on line " + std::to_string(line));
  }
  return x;
}

}  // namespace

void write_ism(const SimplicialSurface& s, std::ostream& out) {
  out << "ISM 1\n";
  out << s.vertex_count() << ' ' << s.edge_count() << ' ' << s.triangle_count() << '\n';
  for (const auto& e : s.edges()) {
    out << e.u << ' ' << e.v << ' ';
    write_double(out, e.length);
    out << '\n';
  }
  for (const auto& t : s.triangles()) {
    out << t.v[0] << ' ' << t.v[1] << ' ' << t.v[2] << '\n';
  }
}

void write_ism(const SimplicialSurface& s, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  write_ism(s, f);
  if (!f.good()) throw IoError("write failed: " + path);
}

SimplicialSurface read_ism(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> std::istringstream {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return std::istringstream(line);
    }
    throw IoError("unexpected end of file at line " + std::to_string(lineno));
  };

  {
    auto hdr = next_line();
    std::string magic;
    int version = 0;
    hdr >> magic >> version;
    if (magic != "ISM" || version != 1) throw IoError("not an ISM 1 file");
  }
  int nv = 0, ne = 0, nf = 0;
  {
    auto counts = next_line();
    if (!(counts >> nv >> ne >> nf)) throw IoError("bad count line");
  }
  std::vector<EdgeSpec> edges;
  edges.reserve(ne);
  for (int i = 0; i < ne; ++i) {
    auto ls = next_line();
    int u = 0, v = 0;
    std::string len;
    if (!(ls >> u >> v >> len)) throw IoError("bad edge on line " + std::to_string(lineno));
    edges.push_back(EdgeSpec{u, v, parse_double(len, lineno)});
  }
  std::vector<TriangleSpec> tris;
  tris.reserve(nf);
  for (int i = 0; i < nf; ++i) {
    auto ls = next_line();
    int a = 0, b = 0, c = 0;
    if (!(ls >> a >> b >> c)) throw IoError("bad triangle on line " + std::to_string(lineno));
    tris.push_back(TriangleSpec{a, b, c});
  }
  return SimplicialSurface::build(nv, edges, tris);
}

SimplicialSurface read_ism(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw IoError("cannot open " + path);
  return read_ism(f);
}

}  // namespace pfcurv
