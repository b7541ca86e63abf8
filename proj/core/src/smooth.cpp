#include "pfcurv/smooth.hpp"

#include <cmath>

#include "pfcurv/errors.hpp"

namespace pfcurv {

namespace {

constexpr double kPi = 3.14159265358979323846;

Vec3 central1(const SmoothSurface::Chart& f, double u, double v, double eu, double ev,
              double h) {
  return (f(u + h * eu, v + h * ev) - f(u - h * eu, v - h * ev)) / (2.0 * h);
}

Vec3 central2(const SmoothSurface::Chart& f, double u, double v, double eu, double ev,
              double h) {
  return (f(u + h * eu, v + h * ev) - 2.0 * f(u, v) + f(u - h * eu, v - h * ev)) / (h * h);
}

Vec3 mixed2(const SmoothSurface::Chart& f, double u, double v, double h) {
  return (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) /
         (4.0 * h * h);
}

// One Richardson step: errors fall from O(h^2) to O(h^4).
template <typename Fn>
Vec3 richardson(Fn&& d, double h) {
  return (4.0 * d(0.5 * h) - d(h)) / 3.0;
}

}  // namespace

SmoothSurface::SmoothSurface(std::string name, std::shared_ptr<const AmbientMetric> metric,
                             Chart chart, double domain_scale)
    : name_(std::move(name)),
      metric_(std::move(metric)),
      chart_(std::move(chart)),
      h1_(1e-5 * domain_scale),
      h2_(1e-4 * domain_scale) {}

Vec3 SmoothSurface::position(const Vec2& uv) const { return chart_(uv.x(), uv.y()); }

void SmoothSurface::tangents(const Vec2& uv, Vec3& xu, Vec3& xv) const {
  xu = central1(chart_, uv.x(), uv.y(), 1.0, 0.0, h1_);
  xv = central1(chart_, uv.x(), uv.y(), 0.0, 1.0, h1_);
}

SmoothSurface::Frame SmoothSurface::frame(const Vec2& uv) const {
  const double u = uv.x(), v = uv.y();
  Frame f;
  f.x = chart_(u, v);
  f.xu = richardson([&](double h) { return central1(chart_, u, v, 1.0, 0.0, h); }, h1_);
  f.xv = richardson([&](double h) { return central1(chart_, u, v, 0.0, 1.0, h); }, h1_);
  f.xuu = richardson([&](double h) { return central2(chart_, u, v, 1.0, 0.0, h); }, h2_);
  f.xvv = richardson([&](double h) { return central2(chart_, u, v, 0.0, 1.0, h); }, h2_);
  f.xuv = richardson([&](double h) { return mixed2(chart_, u, v, h); }, h2_);

  const Mat3 g = metric_->metric(f.x);
  const Vec3 raw = g.inverse() * f.xu.cross(f.xv);
  const double rn = std::sqrt(raw.dot(g * raw));
  if (!(rn > 0.0)) throw NumericalError("surface frame: degenerate tangent plane");
  f.normal = raw / rn;

  f.first << f.xu.dot(g * f.xu), f.xu.dot(g * f.xv), f.xu.dot(g * f.xv), f.xv.dot(g * f.xv);

  const std::array<Mat3, 3> gamma = metric_->christoffels(f.x);
  const auto connection = [&](const Vec3& a, const Vec3& b) {
    return Vec3(a.dot(gamma[0] * b), a.dot(gamma[1] * b), a.dot(gamma[2] * b));
  };
  const Vec3 duu = f.xuu + connection(f.xu, f.xu);
  const Vec3 duv = f.xuv + connection(f.xu, f.xv);
  const Vec3 dvv = f.xvv + connection(f.xv, f.xv);
  f.second << duu.dot(g * f.normal), duv.dot(g * f.normal), duv.dot(g * f.normal),
      dvv.dot(g * f.normal);
  return f;
}

namespace {

// Tangent-basis coefficients of an ambient vector, by I-orthogonal projection.
Vec2 decompose(const SmoothSurface::Frame& f, const Mat3& g, const Vec3& dir) {
  const Vec2 rhs(f.xu.dot(g * dir), f.xv.dot(g * dir));
  return f.first.inverse() * rhs;
}

}  // namespace

double SmoothSurface::directional_curvature(const Vec2& uv, const Vec3& dir) const {
  const Frame f = frame(uv);
  const Mat3 g = metric_->metric(f.x);
  const Vec2 c = decompose(f, g, dir);
  const double denom = c.dot(f.first * c);
  if (!(denom > 0.0)) throw InvalidInput("directional curvature: zero tangent direction");
  return c.dot(f.second * c) / denom;
}

double SmoothSurface::pair_curvature(const Vec2& uv, const Vec3& a, const Vec3& b) const {
  const Frame f = frame(uv);
  const Mat3 g = metric_->metric(f.x);
  const Vec2 ca = decompose(f, g, a);
  const Vec2 cb = decompose(f, g, b);
  const double na = std::sqrt(ca.dot(f.first * ca));
  const double nb = std::sqrt(cb.dot(f.first * cb));
  return ca.dot(f.second * cb) / (na * nb);
}

double SmoothSurface::pair_curvature_polarized(const Vec2& uv, const Vec3& a,
                                               const Vec3& b) const {
  const Frame f = frame(uv);
  const Mat3 g = metric_->metric(f.x);
  const Vec3 ua = a / std::sqrt(a.dot(g * a));
  const Vec3 ub = b / std::sqrt(b.dot(g * b));
  const Vec3 w = ua - ub;
  const double w2 = w.dot(g * w);
  if (w2 < 1e-24) return directional_curvature(uv, ua);
  return 0.5 * (directional_curvature(uv, ua) + directional_curvature(uv, ub) -
                w2 * directional_curvature(uv, w));
}

double SmoothSurface::mean_curvature(const Vec2& uv) const {
  const Frame f = frame(uv);
  return 0.5 * (f.first.inverse() * f.second).trace();
}

double SmoothSurface::mean_curvature_via_directions(const Vec2& uv, double angle) const {
  const Frame f = frame(uv);
  const Mat3 g = metric_->metric(f.x);
  const Vec3 e1 = f.xu / std::sqrt(f.xu.dot(g * f.xu));
  Vec3 e2 = f.xv - f.xv.dot(g * e1) * e1;
  e2 /= std::sqrt(e2.dot(g * e2));
  const Vec3 d1 = std::cos(angle) * e1 + std::sin(angle) * e2;
  const Vec3 d2 = -std::sin(angle) * e1 + std::cos(angle) * e2;
  return 0.5 * (directional_curvature(uv, d1) + directional_curvature(uv, d2));
}

std::array<double, 2> SmoothSurface::principal_curvatures(const Vec2& uv) const {
  const Frame f = frame(uv);
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat2> solver(f.second, f.first);
  return {solver.eigenvalues()(0), solver.eigenvalues()(1)};
}

SmoothSurface make_surface(const std::string& name, double param) {
  const auto radial = [](std::function<double(double, double)> r) {
    return [r](double theta, double phi) -> Vec3 {
      const double st = std::sin(theta);
      return r(theta, phi) * Vec3(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
    };
  };
  if (name == "round-sphere") {
    const double radius = param;
    return SmoothSurface(name, std::make_shared<EuclideanMetric>(),
                         radial([radius](double, double) { return radius; }));
  }
  if (name == "modified-sphere") {
    return SmoothSurface(name, std::make_shared<EuclideanMetric>(),
                         radial([](double theta, double phi) {
                           const double s2 = std::sin(theta) * std::sin(theta);
                           const double c = std::cos(phi);
                           return std::sqrt((1.0 + 0.25 * s2) * (1.0 + 0.25 * s2 * c * c));
                         }));
  }
  if (name == "peanut") {
    return SmoothSurface(name, std::make_shared<EuclideanMetric>(),
                         radial([](double theta, double phi) {
                           const double s2 = std::sin(theta) * std::sin(theta);
                           const double c2 = std::cos(theta) * std::cos(theta);
                           const double cp = std::cos(phi);
                           return std::sqrt((0.5 + c2) * (1.0 + 0.25 * s2 * cp * cp));
                         }));
  }
  if (name == "cylinder") {
    const double radius = param;
    return SmoothSurface(name, std::make_shared<EuclideanMetric>(),
                         [radius](double phi, double z) {
                           return Vec3(radius * std::cos(phi), radius * std::sin(phi), z);
                         });
  }
  if (name == "gowdy-plane") {
    // Spanned by <0,1,0> and (1/3)<-1,0,pi>; normal side is +x.
    return SmoothSurface(name, std::make_shared<GowdyMetric>(0.1), [](double s, double t) {
      return Vec3(-t / 3.0, s, t * kPi / 3.0);
    });
  }
  throw UnknownSurface(name);
}

namespace {

// Chart symmetries used when seeding parameter-space paths.
struct ChartTopology {
  int periodic_axis = -1;  // parameter index with period 2 pi
  bool polar_u = false;    // u in {0, pi} collapses to a point
};

ChartTopology chart_topology(const std::string& name) {
  ChartTopology t;
  if (name == "round-sphere" || name == "modified-sphere" || name == "peanut") {
    t.periodic_axis = 1;
    t.polar_u = true;
  } else if (name == "cylinder") {
    t.periodic_axis = 0;
  }
  return t;
}

double wrap_near(double value, double reference) {
  double d = value - reference;
  while (d > kPi) d -= 2.0 * kPi;
  while (d < -kPi) d += 2.0 * kPi;
  return reference + d;
}

struct SurfaceEnergy {
  const SmoothSurface& s;
  const AmbientMetric& g;

  double energy(const std::vector<Vec2>& uv, std::vector<Vec3>& x) const {
    x.resize(uv.size());
    for (std::size_t i = 0; i < uv.size(); ++i) x[i] = s.position(uv[i]);
    double e = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
      const Vec3 d = x[k + 1] - x[k];
      const Vec3 m = 0.5 * (x[k] + x[k + 1]);
      e += d.dot(g.metric(m) * d);
    }
    return e;
  }

  void gradient(const std::vector<Vec2>& uv, const std::vector<Vec3>& x,
                std::vector<Vec2>& grad) const {
    const std::size_t n = uv.size();
    std::vector<Vec3> gx(n, Vec3::Zero());
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const Vec3 d = x[k + 1] - x[k];
      const Vec3 m = 0.5 * (x[k] + x[k + 1]);
      const Vec3 gd = g.metric(m) * d;
      const std::array<Mat3, 3> dg = g.metric_partials(m);
      const Vec3 t(d.dot(dg[0] * d), d.dot(dg[1] * d), d.dot(dg[2] * d));
      gx[k] += -2.0 * gd + 0.5 * t;
      gx[k + 1] += 2.0 * gd + 0.5 * t;
    }
    grad.assign(n, Vec2::Zero());
    for (std::size_t i = 1; i + 1 < n; ++i) {
      Vec3 xu, xv;
      s.tangents(uv[i], xu, xv);
      grad[i] = Vec2(xu.dot(gx[i]), xv.dot(gx[i]));
    }
  }

  double length(const std::vector<Vec3>& x) const {
    double len = 0.0;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
      const Vec3 d = x[k + 1] - x[k];
      const Vec3 m = 0.5 * (x[k] + x[k + 1]);
      len += std::sqrt(d.dot(g.metric(m) * d));
    }
    return len;
  }
};

double dot2(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].dot(b[i]);
  return s;
}

void minimize_surface_energy(const SurfaceEnergy& model, std::vector<Vec2>& uv, int max_iter) {
  const std::size_t n = uv.size();
  if (n < 3) return;
  std::vector<Vec3> x;
  std::vector<Vec2> grad, grad_new, dir;
  double energy = model.energy(uv, x);
  model.gradient(uv, x, grad);
  dir.assign(n, Vec2::Zero());
  for (std::size_t i = 0; i < n; ++i) dir[i] = -grad[i];

  std::vector<Vec2> trial(n);
  std::vector<Vec3> xt;
  const auto at = [&](double t) {
    for (std::size_t i = 0; i < n; ++i) trial[i] = uv[i] + t * dir[i];
    return model.energy(trial, xt);
  };

  double t_prev = -1.0;
  int stagnant = 0;
  for (int iter = 0; iter < max_iter; ++iter) {
    double g0 = dot2(grad, dir);
    if (g0 >= 0.0) {
      for (std::size_t i = 0; i < n; ++i) dir[i] = -grad[i];
      g0 = dot2(grad, dir);
      if (g0 >= -1e-30) break;
    }
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
    if (e_best >= energy) break;

    for (std::size_t i = 0; i < n; ++i) uv[i] += t_best * dir[i];
    energy = model.energy(uv, x);
    model.gradient(uv, x, grad_new);

    const double gg = dot2(grad, grad);
    double beta = (dot2(grad_new, grad_new) - dot2(grad_new, grad)) / gg;
    beta = std::max(0.0, beta);
    if ((iter + 1) % static_cast<int>(3 * n) == 0) beta = 0.0;
    for (std::size_t i = 0; i < n; ++i) dir[i] = -grad_new[i] + beta * dir[i];
    grad.swap(grad_new);
    t_prev = t_best;

    if (energy - e_best < 1e-15 * energy) {
      if (++stagnant >= 2) break;
    } else {
      stagnant = 0;
    }
  }
}

std::vector<Vec2> refine_uv(const std::vector<Vec2>& uv) {
  std::vector<Vec2> out;
  out.reserve(2 * uv.size() - 1);
  for (std::size_t i = 0; i + 1 < uv.size(); ++i) {
    out.push_back(uv[i]);
    out.push_back(0.5 * (uv[i] + uv[i + 1]));
  }
  out.push_back(uv.back());
  return out;
}

}  // namespace

SurfacePath surface_geodesic(const SmoothSurface& s, const Vec2& a, const Vec2& b,
                             const PathOptions& opt) {
  const ChartTopology topo = chart_topology(s.name());
  Vec2 pa = a, pb = b;
  if (topo.polar_u) {
    // A polar endpoint has no meaningful longitude; borrow the other one's.
    if (std::abs(std::sin(pa.x())) < 1e-12) pa.y() = pb.y();
    if (std::abs(std::sin(pb.x())) < 1e-12) pb.y() = pa.y();
  }
  if (topo.periodic_axis >= 0) {
    pb[topo.periodic_axis] = wrap_near(pb[topo.periodic_axis], pa[topo.periodic_axis]);
  }

  const SurfaceEnergy model{s, s.ambient()};
  int segments = opt.initial_segments;
  std::vector<Vec2> uv(segments + 1);
  for (int i = 0; i <= segments; ++i) {
    uv[i] = pa + (static_cast<double>(i) / segments) * (pb - pa);
  }

  std::vector<Vec3> x;
  minimize_surface_energy(model, uv, opt.max_iterations_per_node * (segments + 1));
  model.energy(uv, x);
  double len = model.length(x);
  while (true) {
    uv = refine_uv(uv);
    segments *= 2;
    minimize_surface_energy(model, uv, opt.max_iterations_per_node * (segments + 1));
    model.energy(uv, x);
    const double len2 = model.length(x);
    const double corr = (len2 - len) / 3.0;
    len = len2;
    if (std::abs(corr) < opt.length_rel_tol * len2 || segments >= opt.max_segments) {
      SurfacePath path;
      path.uv = std::move(uv);
      path.points = std::move(x);
      path.length = len2 + corr;
      return path;
    }
  }
}

SurfaceMidpoint surface_path_midpoint(const SmoothSurface& s, const SurfacePath& path) {
  const AmbientMetric& g = s.ambient();
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
      SurfaceMidpoint mid;
      mid.uv = path.uv[k] + t * (path.uv[k + 1] - path.uv[k]);
      mid.point = s.position(mid.uv);
      mid.tangent = g.normalized(mid.point, x[k + 1] - x[k]);
      return mid;
    }
    acc += seg[k];
  }
  throw NumericalError("surface midpoint: empty path");
}

double smooth_path_integral(const SmoothSurface& s, const std::vector<Vec2>& uv_path) {
  const AmbientMetric& g = s.ambient();
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < uv_path.size(); ++k) {
    const Vec2 mid_uv = 0.5 * (uv_path[k] + uv_path[k + 1]);
    const Vec3 d = s.position(uv_path[k + 1]) - s.position(uv_path[k]);
    const Vec3 m = s.position(mid_uv);
    const double ds = std::sqrt(d.dot(g.metric(m) * d));
    if (ds == 0.0) continue;
    total += s.directional_curvature(mid_uv, d) * ds;
  }
  return total;
}

}  // namespace pfcurv
