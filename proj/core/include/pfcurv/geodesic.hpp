#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "pfcurv/geometry.hpp"
#include "pfcurv/metric.hpp"

namespace pfcurv {

struct ShootResult {
  Vec3 point;
  Vec3 velocity;  // g-unit tangent at the endpoint
};

// Integrates the geodesic equation x'' = -Gamma(x)(x',x') at unit speed for
// the given arclength with an adaptive embedded Runge-Kutta pair.
ShootResult geodesic_shoot(const AmbientMetric& g, const Vec3& start, const Vec3& direction,
                           double arclength);

struct PathOptions {
  int initial_segments = 64;
  int max_segments = 2048;
  // Refinement stops once doubling the segment count changes the length by
  // less than this relative amount; the returned length then adds the
  // matching second-order extrapolation step.
  double length_rel_tol = 1e-10;
  int max_iterations_per_node = 60;
};

struct GeodesicPath {
  std::vector<Vec3> points;
  double length = 0.0;
};

// Minimizing geodesic between fixed endpoints: discrete path energy
// sum |dx|^2_g(midpoint) over a polyline, minimized by nonlinear conjugate
// gradients from the straight seed, refined by node doubling.
GeodesicPath geodesic_path(const AmbientMetric& g, const Vec3& p, const Vec3& q,
                           const PathOptions& opt = {});
double geodesic_distance(const AmbientMetric& g, const Vec3& p, const Vec3& q,
                         const PathOptions& opt = {});

struct PathMidpoint {
  Vec3 point;      // arclength midpoint
  Vec3 direction;  // g-unit tangent there
};
PathMidpoint path_midpoint(const AmbientMetric& g, const GeodesicPath& path);

// Distance solver with memoization. When the metric admits x/y translations
// (and the z-period symmetry) congruent point pairs share one solve.
class GeodesicSolver {
 public:
  explicit GeodesicSolver(std::shared_ptr<const AmbientMetric> g, PathOptions opt = {});

  double distance(const Vec3& p, const Vec3& q);
  GeodesicPath path(const Vec3& p, const Vec3& q) const;
  const AmbientMetric& metric() const { return *g_; }
  const PathOptions& options() const { return opt_; }

  long cache_hits() const { return hits_; }
  long cache_misses() const { return misses_; }

 private:
  std::shared_ptr<const AmbientMetric> g_;
  PathOptions opt_;
  std::map<std::array<long long, 6>, double> cache_;
  long hits_ = 0;
  long misses_ = 0;
};

}  // namespace pfcurv
