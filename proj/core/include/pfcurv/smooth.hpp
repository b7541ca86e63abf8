#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "pfcurv/geodesic.hpp"
#include "pfcurv/geometry.hpp"
#include "pfcurv/metric.hpp"

namespace pfcurv {

// Parametric surface in an ambient 3-chart with a Riemannian metric.
// Derivatives come from central differences (one Richardson step), so only
// the chart function itself is supplied. Normal orientation follows the
// chart's (u,v) order; the factory picks charts whose normals point outward
// (radial surfaces, cylinder) or toward +x (Gowdy plane) to match the
// concave-positive hinge convention (sphere H = -1/R).
class SmoothSurface {
 public:
  using Chart = std::function<Vec3(double, double)>;

  struct Frame {
    Vec3 x, xu, xv;        // position, tangents
    Vec3 xuu, xuv, xvv;    // second derivatives
    Vec3 normal;           // g-unit, g-orthogonal to both tangents
    Mat2 first;            // I_ij
    Mat2 second;           // II_ij, ambient covariant derivative against normal
  };

  SmoothSurface(std::string name, std::shared_ptr<const AmbientMetric> metric, Chart chart,
                double domain_scale = 1.0);

  const std::string& name() const { return name_; }
  const AmbientMetric& ambient() const { return *metric_; }
  std::shared_ptr<const AmbientMetric> ambient_ptr() const { return metric_; }

  Vec3 position(const Vec2& uv) const;
  Frame frame(const Vec2& uv) const;
  // Tangents only (single central difference), for hot paths.
  void tangents(const Vec2& uv, Vec3& xu, Vec3& xv) const;

  // kappa(v) = II(v,v)/I(v,v) for an ambient vector assumed tangent; the
  // vector is decomposed in the tangent basis by least squares.
  double directional_curvature(const Vec2& uv, const Vec3& dir) const;
  // Bilinear value from II directly.
  double pair_curvature(const Vec2& uv, const Vec3& a, const Vec3& b) const;
  // Same value via the polarization identity
  //   alpha(u,v) = (kappa(u) + kappa(v) - |u-v|^2 kappa(unit(u-v))) / 2
  // for g-unit tangents.
  double pair_curvature_polarized(const Vec2& uv, const Vec3& a, const Vec3& b) const;

  double mean_curvature(const Vec2& uv) const;  // (1/2) tr(I^{-1} II)
  // (1/2)(kappa(e1) + kappa(e2)) for the g-orthonormal tangent pair obtained
  // by rotating the Gram-Schmidt frame by `angle`.
  double mean_curvature_via_directions(const Vec2& uv, double angle) const;
  std::array<double, 2> principal_curvatures(const Vec2& uv) const;  // ascending

 private:
  std::string name_;
  std::shared_ptr<const AmbientMetric> metric_;
  Chart chart_;
  double h1_, h2_;  // difference steps for first/second derivatives
};

// Registry: round-sphere (radius), modified-sphere, peanut, cylinder
// (radius), gowdy-plane (metric amplitude 0.1). Radial surfaces use
// colatitude/longitude (theta, phi); cylinder uses (phi, z); the plane uses
// coefficients of the spanning vectors <0,1,0> and (1/3)<-1,0,pi>.
SmoothSurface make_surface(const std::string& name, double param = 1.0);

// Geodesic of the surface (not of the ambient chart) between two parameter
// points: discrete path energy over a parameter-space polyline, minimized by
// conjugate gradients. Polar endpoints inherit the other endpoint's phi, and
// periodic charts take the short way around.
struct SurfacePath {
  std::vector<Vec2> uv;
  std::vector<Vec3> points;
  double length = 0.0;
};
SurfacePath surface_geodesic(const SmoothSurface& s, const Vec2& a, const Vec2& b,
                             const PathOptions& opt = {});

struct SurfaceMidpoint {
  Vec2 uv;
  Vec3 point;
  Vec3 tangent;  // g-unit along the path
};
SurfaceMidpoint surface_path_midpoint(const SmoothSurface& s, const SurfacePath& path);

// Integral of kappa(tangent) ds along a parameter-space polyline (midpoint
// quadrature); for a geodesic this is the total turning of the tangent.
double smooth_path_integral(const SmoothSurface& s, const std::vector<Vec2>& uv_path);

}  // namespace pfcurv
