#include "pfcurv/geodesic.hpp"

#include <cmath>

#include "pfcurv/errors.hpp"

namespace pfcurv {

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;

Vec6 geodesic_rhs(const AmbientMetric& g, const Vec6& y) {
  const Vec3 x = y.head<3>();
  const Vec3 v = y.tail<3>();
  const std::array<Mat3, 3> gamma = g.christoffels(x);
  Vec6 dy;
  dy.head<3>() = v;
  for (int i = 0; i < 3; ++i) dy(3 + i) = -v.dot(gamma[i] * v);
  return dy;
}

// Dormand-Prince 5(4) step; returns the 5th-order update and error estimate.
void dp54_step(const AmbientMetric& g, const Vec6& y, double h, Vec6& y5, Vec6& err) {
  const Vec6 k1 = geodesic_rhs(g, y);
  const Vec6 k2 = geodesic_rhs(g, y + h * (1.0 / 5.0) * k1);
  const Vec6 k3 = geodesic_rhs(g, y + h * ((3.0 / 40.0) * k1 + (9.0 / 40.0) * k2));
  const Vec6 k4 = geodesic_rhs(
      g, y + h * ((44.0 / 45.0) * k1 + (-56.0 / 15.0) * k2 + (32.0 / 9.0) * k3));
  const Vec6 k5 =
      geodesic_rhs(g, y + h * ((19372.0 / 6561.0) * k1 + (-25360.0 / 2187.0) * k2 +
                               (64448.0 / 6561.0) * k3 + (-212.0 / 729.0) * k4));
  const Vec6 k6 = geodesic_rhs(
      g, y + h * ((9017.0 / 3168.0) * k1 + (-355.0 / 33.0) * k2 + (46732.0 / 5247.0) * k3 +
                  (49.0 / 176.0) * k4 + (-5103.0 / 18656.0) * k5));
  y5 = y + h * ((35.0 / 384.0) * k1 + (500.0 / 1113.0) * k3 + (125.0 / 192.0) * k4 +
                (-2187.0 / 6784.0) * k5 + (11.0 / 84.0) * k6);
  const Vec6 k7 = geodesic_rhs(g, y5);
  const Vec6 y4 = y + h * ((5179.0 / 57600.0) * k1 + (7571.0 / 16695.0) * k3 +
                           (393.0 / 640.0) * k4 + (-92097.0 / 339200.0) * k5 +
                           (187.0 / 2100.0) * k6 + (1.0 / 40.0) * k7);
  err = y5 - y4;
}

double path_energy(const AmbientMetric& g, const std::vector<Vec3>& x) {
  double e = 0.0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    const Vec3 d = x[k + 1] - x[k];
    const Vec3 m = 0.5 * (x[k] + x[k + 1]);
    e += d.dot(g.metric(m) * d);
  }
  return e;
}

void path_energy_grad(const AmbientMetric& g, const std::vector<Vec3>& x,
                      std::vector<Vec3>& grad) {
  const std::size_t n = x.size();
  grad.assign(n, Vec3::Zero());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Vec3 d = x[k + 1] - x[k];
    const Vec3 m = 0.5 * (x[k] + x[k + 1]);
    const Vec3 gd = g.metric(m) * d;
    const std::array<Mat3, 3> dg = g.metric_partials(m);
    const Vec3 t(d.dot(dg[0] * d), d.dot(dg[1] * d), d.dot(dg[2] * d));
    grad[k] += -2.0 * gd + 0.5 * t;
    grad[k + 1] += 2.0 * gd + 0.5 * t;
  }
  grad.front() = Vec3::Zero();
  grad.back() = Vec3::Zero();
}

double dot(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].dot(b[i]);
  return s;
}

// Polak-Ribiere conjugate gradients on the interior nodes.
void minimize_energy(const AmbientMetric& g, std::vector<Vec3>& x, int max_iter) {
  const std::size_t n = x.size();
  if (n < 3) return;
  std::vector<Vec3> grad, grad_new, dir;
  double energy = path_energy(g, x);
  path_energy_grad(g, x, grad);
  dir.assign(n, Vec3::Zero());
  for (std::size_t i = 0; i < n; ++i) dir[i] = -grad[i];

  std::vector<Vec3> trial(n);
  const auto at = [&](double t) {
    for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + t * dir[i];
    return path_energy(g, trial);
  };

  double t_prev = -1.0;
  int stagnant = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    double g0 = dot(grad, dir);
    if (g0 >= 0.0) {  // reset to steepest descent
      for (std::size_t i = 0; i < n; ++i) dir[i] = -grad[i];
      g0 = dot(grad, dir);
      if (g0 >= -1e-30) break;
    }

    // One-point quadratic fit along the ray, then a safeguarded polish.
    double t1 = (t_prev > 0.0) ? t_prev : energy / (-g0);
    double e1 = at(t1);
    const double denom = 2.0 * (e1 - energy - g0 * t1);
    double t2 = (denom > 0.0) ? (-g0 * t1 * t1 / denom) : 2.0 * t1;
    t2 = std::min(std::max(t2, 1e-3 * t1), 1e3 * t1);
    const double e2 = at(t2);
    double t_best = (e1 < e2) ? t1 : t2;
    double e_best = std::min(e1, e2);
    int backtrack = 0;
    while (e_best >= energy && backtrack++ < 60) {
      t_best *= 0.5;
      e_best = at(t_best);
    }
    if (e_best >= energy) break;  // no descent left at this resolution

    for (std::size_t i = 0; i < n; ++i) x[i] += t_best * dir[i];
    path_energy_grad(g, x, grad_new);

    const double gg = dot(grad, grad);
    double beta = (dot(grad_new, grad_new) - dot(grad_new, grad)) / gg;
    beta = std::max(0.0, beta);
    if ((iter + 1) % static_cast<int>(3 * n) == 0) beta = 0.0;
    for (std::size_t i = 0; i < n; ++i) dir[i] = -grad_new[i] + beta * dir[i];
    grad.swap(grad_new);
    t_prev = t_best;

    if (energy - e_best < 1e-15 * energy) {
      if (++stagnant >= 2) {
        energy = e_best;
        break;
      }
    } else {
      stagnant = 0;
    }
    energy = e_best;
  }
}

double polyline_length(const AmbientMetric& g, const std::vector<Vec3>& x) {
  double len = 0.0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    const Vec3 d = x[k + 1] - x[k];
    const Vec3 m = 0.5 * (x[k] + x[k + 1]);
    len += std::sqrt(d.dot(g.metric(m) * d));
  }
  return len;
}

std::vector<Vec3> straight_seed(const Vec3& p, const Vec3& q, int segments) {
  std::vector<Vec3> x(segments + 1);
  for (int i = 0; i <= segments; ++i) {
    x[i] = p + (static_cast<double>(i) / segments) * (q - p);
  }
  return x;
}

std::vector<Vec3> refine_nodes(const std::vector<Vec3>& x) {
  std::vector<Vec3> out;
  out.reserve(2 * x.size() - 1);
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    out.push_back(x[i]);
    out.push_back(0.5 * (x[i] + x[i + 1]));
  }
  out.push_back(x.back());
  return out;
}

constexpr double kTwoPi = 6.283185307179586476925286766559;

}  // namespace

ShootResult geodesic_shoot(const AmbientMetric& g, const Vec3& start, const Vec3& direction,
                           double arclength) {
  const double dn = g.norm(start, direction);
  if (!(dn > 0.0)) throw InvalidInput("geodesic direction must be nonzero");
  Vec6 y;
  y.head<3>() = start;
  y.tail<3>() = direction / dn;
  if (arclength == 0.0) return {start, y.tail<3>()};

  const double s_end = arclength;
  const double tol_abs = 1e-12;
  const double tol_rel = 1e-12;
  double s = 0.0;
  double h = s_end / 16.0;
  int steps = 0;
  while (s < s_end) {
    if (++steps > 1000000) throw StepFailure("geodesic integrator exceeded step budget");
    h = std::min(h, s_end - s);
    Vec6 y5, err;
    dp54_step(g, y, h, y5, err);
    double norm2 = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double sc = tol_abs + tol_rel * std::max(std::abs(y(i)), std::abs(y5(i)));
      const double r = err(i) / sc;
      norm2 += r * r;
    }
    const double en = std::sqrt(norm2 / 6.0);
    if (en <= 1.0) {
      s += h;
      y = y5;
    }
    const double factor = (en > 0.0) ? 0.9 * std::pow(en, -0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, factor));
    if (h < 1e-14 * std::abs(s_end)) throw StepFailure("geodesic integrator step underflow");
  }
  ShootResult out;
  out.point = y.head<3>();
  out.velocity = g.normalized(out.point, y.tail<3>());
  return out;
}

GeodesicPath geodesic_path(const AmbientMetric& g, const Vec3& p, const Vec3& q,
                           const PathOptions& opt) {
  GeodesicPath path;
  if (g.flat()) {
    path.points = straight_seed(p, q, opt.initial_segments);
    path.length = (q - p).norm();
    return path;
  }
  int segments = opt.initial_segments;
  std::vector<Vec3> x = straight_seed(p, q, segments);
  minimize_energy(g, x, opt.max_iterations_per_node * (segments + 1));
  double len = polyline_length(g, x);
  while (true) {
    x = refine_nodes(x);
    segments *= 2;
    minimize_energy(g, x, opt.max_iterations_per_node * (segments + 1));
    const double len2 = polyline_length(g, x);
    const double corr = (len2 - len) / 3.0;  // second-order extrapolation
    len = len2;
    if (std::abs(corr) < opt.length_rel_tol * len2 || segments >= opt.max_segments) {
      path.points = std::move(x);
      path.length = len2 + corr;
      return path;
    }
  }
}

double geodesic_distance(const AmbientMetric& g, const Vec3& p, const Vec3& q,
                         const PathOptions& opt) {
  if (g.flat()) return (q - p).norm();
  return geodesic_path(g, p, q, opt).length;
}

PathMidpoint path_midpoint(const AmbientMetric& g, const GeodesicPath& path) {
  const std::vector<Vec3>& x = path.points;
  std::vector<double> seg(x.size() - 1);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    const Vec3 d = x[k + 1] - x[k];
    const Vec3 m = 0.5 * (x[k] + x[k + 1]);
    seg[k] = std::sqrt(d.dot(g.metric(m) * d));
    total += seg[k];
  }
  double acc = 0.0;
  const double half = 0.5 * total;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    if (acc + seg[k] >= half || k + 2 == x.size()) {
      const double t = (seg[k] > 0.0) ? (half - acc) / seg[k] : 0.5;
      PathMidpoint mid;
      mid.point = x[k] + t * (x[k + 1] - x[k]);
      mid.direction = g.normalized(mid.point, x[k + 1] - x[k]);
      return mid;
    }
    acc += seg[k];
  }
  throw NumericalError("path midpoint: empty path");
}

GeodesicSolver::GeodesicSolver(std::shared_ptr<const AmbientMetric> g, PathOptions opt)
    : g_(std::move(g)), opt_(opt) {}

double GeodesicSolver::distance(const Vec3& p, const Vec3& q) {
  if (g_->flat()) return (q - p).norm();

  std::array<long long, 6> key{};
  const auto quantize = [](double v) { return std::llround(v * 1e12); };
  if (g_->homogeneous_xy()) {
    // Congruence class: |dx|, |dy|, endpoint z values with the smaller first,
    // shifted by the metric's z period.
    double z0 = p.z(), z1 = q.z();
    if (z0 > z1) std::swap(z0, z1);
    const double shift = std::floor(z0 / kTwoPi) * kTwoPi;
    key = {quantize(std::abs(q.x() - p.x())), quantize(std::abs(q.y() - p.y())),
           quantize(z0 - shift), quantize(z1 - shift), 0, 0};
  } else {
    key = {quantize(p.x()), quantize(p.y()), quantize(p.z()),
           quantize(q.x()), quantize(q.y()), quantize(q.z())};
    std::array<long long, 6> swapped{key[3], key[4], key[5], key[0], key[1], key[2]};
    if (swapped < key) key = swapped;
  }
  const auto it = cache_.find(key);
  if (it != cache_.end()) {
    ++hits_;
    return it->second;
  }
  ++misses_;
  const double d = geodesic_distance(*g_, p, q, opt_);
  cache_.emplace(key, d);
  return d;
}

GeodesicPath GeodesicSolver::path(const Vec3& p, const Vec3& q) const {
  return geodesic_path(*g_, p, q, opt_);
}

}  // namespace pfcurv
