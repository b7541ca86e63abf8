#pragma once

#include <cmath>
#include <vector>

namespace pfcurv {

// Signed hinge angle per edge: positive where the surface is concave toward
// the positive orientation side, negative where convex, zero where flat.
// Boundary edges carry no angle.
struct HingeField {
  enum class Source { euclidean_normals, layered_metric };

  Source source = Source::euclidean_normals;
  std::vector<double> angle;  // radians; NaN on boundary edges
  std::vector<bool> valid;

  bool is_valid(int e) const { return valid[e]; }
};

struct HingeStats {
  double mean_abs_deg = 0.0;
  double max_abs_deg = 0.0;
  int count = 0;
};

inline HingeStats hinge_angle_stats(const HingeField& f) {
  HingeStats st;
  double sum = 0.0;
  const double rad2deg = 180.0 / 3.14159265358979323846;
  for (std::size_t e = 0; e < f.angle.size(); ++e) {
    if (!f.valid[e]) continue;
    const double a = std::abs(f.angle[e]) * rad2deg;
    sum += a;
    st.max_abs_deg = std::max(st.max_abs_deg, a);
    ++st.count;
  }
  st.mean_abs_deg = st.count ? sum / st.count : 0.0;
  return st;
}

}  // namespace pfcurv
