#pragma once

#include <array>
#include <cmath>
#include <memory>
#include <string>

#include "pfcurv/geometry.hpp"

namespace pfcurv {

// Smooth Riemannian metric on a 3-coordinate chart. Christoffel symbols are
// indexed christoffel(p)[i](j,k) = Gamma^i_jk.
class AmbientMetric {
 public:
  virtual ~AmbientMetric() = default;

  virtual Mat3 metric(const Vec3& p) const = 0;
  // partials(p)[c] = d g / d x^c.
  virtual std::array<Mat3, 3> metric_partials(const Vec3& p) const = 0;
  virtual std::array<Mat3, 3> christoffels(const Vec3& p) const;

  // Identically flat chart (all Christoffels vanish, geodesics are lines).
  virtual bool flat() const { return false; }
  // Isometries include all translations in x and y (allows geodesic reuse).
  virtual bool homogeneous_xy() const { return flat(); }

  double dot(const Vec3& p, const Vec3& a, const Vec3& b) const {
    return a.dot(metric(p) * b);
  }
  double norm(const Vec3& p, const Vec3& a) const { return std::sqrt(dot(p, a, a)); }
  Vec3 normalized(const Vec3& p, const Vec3& a) const { return a / norm(p, a); }
};

class EuclideanMetric final : public AmbientMetric {
 public:
  Mat3 metric(const Vec3&) const override { return Mat3::Identity(); }
  std::array<Mat3, 3> metric_partials(const Vec3&) const override {
    return {Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
  }
  std::array<Mat3, 3> christoffels(const Vec3&) const override {
    return {Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
  }
  bool flat() const override { return true; }
};

// Spatial part of a Gowdy wave: diag(e^{a sin z}, e^{-a sin z}, 1).
class GowdyMetric final : public AmbientMetric {
 public:
  explicit GowdyMetric(double amplitude = 0.1) : amp_(amplitude) {}

  double amplitude() const { return amp_; }
  Mat3 metric(const Vec3& p) const override;
  std::array<Mat3, 3> metric_partials(const Vec3& p) const override;
  std::array<Mat3, 3> christoffels(const Vec3& p) const override;
  bool homogeneous_xy() const override { return true; }

 private:
  double amp_;
};

// g-cross product at p: g-orthogonal to both arguments, g-norm equal to the
// g-area of their parallelogram, oriented with the coordinate orientation.
inline Vec3 metric_cross(const AmbientMetric& g, const Vec3& p, const Vec3& a, const Vec3& b) {
  const Mat3 G = g.metric(p);
  return std::sqrt(G.determinant()) * (G.inverse() * a.cross(b));
}

// Central-difference Christoffels straight from metric values; a cross-check
// for analytic implementations.
std::array<Mat3, 3> christoffels_via_fd(const AmbientMetric& g, const Vec3& p, double h = 1e-6);

// Metric registry: "euclidean" or "gowdy" (optional amp=... parameter).
std::shared_ptr<const AmbientMetric> make_metric(const std::string& name, double amp = 0.1);

}  // namespace pfcurv
