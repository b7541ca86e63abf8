#pragma once

#include <iosfwd>
#include <string>

#include "pfcurv/surface.hpp"

namespace pfcurv {

// Plain-text intrinsic mesh format:
//   ISM 1
//   V E F
//   u v length     (E lines, vertex ids 0-based)
//   a b c          (F lines, oriented)
// Lengths are written in shortest round-trip form, so write/read is
// bit-exact.
void write_ism(const SimplicialSurface& s, std::ostream& out);
void write_ism(const SimplicialSurface& s, const std::string& path);
SimplicialSurface read_ism(std::istream& in);
SimplicialSurface read_ism(const std::string& path);

}  // namespace pfcurv
