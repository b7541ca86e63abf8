#include "pfcurv/metric.hpp"

#include "pfcurv/errors.hpp"

namespace pfcurv {

std::array<Mat3, 3> AmbientMetric::christoffels(const Vec3& p) const {
  // Gamma^i_jk = (1/2) g^{il} (d_j g_{lk} + d_k g_{lj} - d_l g_{jk}).
  const Mat3 ginv = metric(p).inverse();
  const std::array<Mat3, 3> dg = metric_partials(p);
  std::array<Mat3, 3> out{Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) {
          s += ginv(i, l) * (dg[j](l, k) + dg[k](l, j) - dg[l](j, k));
        }
        out[i](j, k) = 0.5 * s;
      }
    }
  }
  return out;
}

Mat3 GowdyMetric::metric(const Vec3& p) const {
  const double s = amp_ * std::sin(p.z());
  Mat3 g = Mat3::Zero();
  g(0, 0) = std::exp(s);
  g(1, 1) = std::exp(-s);
  g(2, 2) = 1.0;
  return g;
}

std::array<Mat3, 3> GowdyMetric::metric_partials(const Vec3& p) const {
  const double s = amp_ * std::sin(p.z());
  const double c = amp_ * std::cos(p.z());
  Mat3 dz = Mat3::Zero();
  dz(0, 0) = c * std::exp(s);
  dz(1, 1) = -c * std::exp(-s);
  return {Mat3::Zero(), Mat3::Zero(), dz};
}

std::array<Mat3, 3> GowdyMetric::christoffels(const Vec3& p) const {
  const double s = amp_ * std::sin(p.z());
  const double half_c = 0.5 * amp_ * std::cos(p.z());
  std::array<Mat3, 3> out{Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
  out[0](0, 2) = out[0](2, 0) = half_c;                    // Gamma^x_xz
  out[1](1, 2) = out[1](2, 1) = -half_c;                   // Gamma^y_yz
  out[2](0, 0) = -half_c * std::exp(s);                    // Gamma^z_xx
  out[2](1, 1) = half_c * std::exp(-s);                    // Gamma^z_yy
  return out;
}

std::array<Mat3, 3> christoffels_via_fd(const AmbientMetric& g, const Vec3& p, double h) {
  std::array<Mat3, 3> dg;
  for (int c = 0; c < 3; ++c) {
    Vec3 dp = Vec3::Zero();
    dp[c] = h;
    dg[c] = (g.metric(p + dp) - g.metric(p - dp)) / (2.0 * h);
  }
  const Mat3 ginv = g.metric(p).inverse();
  std::array<Mat3, 3> out{Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int l = 0; l < 3; ++l) {
          s += ginv(i, l) * (dg[j](l, k) + dg[k](l, j) - dg[l](j, k));
        }
        out[i](j, k) = 0.5 * s;
      }
    }
  }
  return out;
}

std::shared_ptr<const AmbientMetric> make_metric(const std::string& name, double amp) {
  if (name == "euclidean") return std::make_shared<EuclideanMetric>();
  if (name == "gowdy") return std::make_shared<GowdyMetric>(amp);
  throw InvalidInput("unknown metric: " + name);
}

}  // namespace pfcurv
