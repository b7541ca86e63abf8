#include "pfcurv/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <thread>

#include "pfcurv/baselines.hpp"
#include "pfcurv/curvature.hpp"
#include "pfcurv/errors.hpp"
#include "pfcurv/layers.hpp"
#include "pfcurv/metric.hpp"
#include "pfcurv/smooth.hpp"
#include "pfcurv/svg.hpp"

namespace pfcurv {
namespace {

constexpr double kPi = 3.14159265358979323846;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                "#9467bd", "#8c564b"};

int thread_cap() {
  if (const char* env = std::getenv("PFCURV_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

// Results are stored by index, so the schedule cannot affect the output.
void parallel_for(int n, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_cap(), n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  return out;
}

}  // namespace

// Midpoint quadrature over (colatitude, longitude); midpoints never touch
// the poles.
double smooth_surface_area(const SmoothSurface& s) {
  const int nu = 256, nv = 512;
  const double du = kPi / nu, dv = 2.0 * kPi / nv;
  double area = 0.0;
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) {
      Vec3 xu, xv;
      s.tangents({(i + 0.5) * du, (j + 0.5) * dv}, xu, xv);
      area += xu.cross(xv).norm() * du * dv;
    }
  return area;
}

EmbeddedSurface rescale_to_area(const EmbeddedSurface& es, double target_area) {
  const double lambda = std::sqrt(target_area / es.surface.total_area());
  std::vector<Vec3> scaled = es.positions;
  for (auto& p : scaled) p *= lambda;
  std::vector<TriangleSpec> tris;
  tris.reserve(es.surface.triangle_count());
  for (int t = 0; t < es.surface.triangle_count(); ++t) {
    const auto& tr = es.surface.triangle(t);
    tris.push_back({tr.v[0], tr.v[1], tr.v[2]});
  }
  return embed_points(scaled, tris);
}

namespace {

// Frames degenerate at the poles of radial charts; references are evaluated
// a hair inside instead.
Vec2 clamp_colatitude(Vec2 uv) {
  const double eps = 1e-5;
  uv.x() = std::min(std::max(uv.x(), eps), kPi - eps);
  return uv;
}

double summary_pct(const CurvatureReport& r, const char* method) {
  const MethodSummary* s = r.summary(method);
  return s ? s->pct_of_scale : 0.0;
}

}  // namespace

std::vector<CurvatureReport> run_euclidean_suite(const std::string& surface,
                                                 const std::vector<int>& layers,
                                                 const EuclideanSuiteOptions& opt) {
  std::vector<CurvatureReport> reports;
  if (layers.empty()) return reports;
  if (!opt.out_dir.empty()) std::filesystem::create_directories(opt.out_dir);

  const GeneratedSurface probe = generate_layered_surface(surface, layers.front());
  const SmoothSurface smooth = make_surface(probe.smooth_name, probe.smooth_param);
  const double target_area = opt.rescale_area ? smooth_surface_area(smooth) : 0.0;

  for (int L : layers) {
    const GeneratedSurface g = generate_layered_surface(surface, L);
    const EmbeddedSurface es =
        opt.rescale_area ? rescale_to_area(g.embedded, target_area) : g.embedded;
    const SimplicialSurface& s = es.surface;
    const DualTessellation dual = build_dual(s, opt.dual, opt.mixed_fallback);
    const HingeField hinges = hinge_angles_euclidean(es);
    const HingeStats stats = hinge_angle_stats(hinges);

    const VertexField pf = mean_curvature(s, dual, hinges);
    const CotanCurvature cot = cotan_mean_curvature(es, dual);
    const CsmCurvature csm = csm_tensor(es, dual);
    const EdgeField dir = directed_curvature(s, dual, hinges);

    const int n_vert = s.vertex_count(), n_edge = s.edge_count();
    std::vector<double> h_ref(n_vert);
    std::vector<std::array<double, 2>> p_ref(n_vert);
    double denom = 0.0;
    for (int v = 0; v < n_vert; ++v) {
      const Vec2 uv = clamp_colatitude(g.chart_uv[v]);
      h_ref[v] = smooth.mean_curvature(uv);
      p_ref[v] = smooth.principal_curvatures(uv);
      denom += 0.5 * (std::abs(p_ref[v][0]) + std::abs(p_ref[v][1]));
    }
    denom /= n_vert;

    // Directed references: smooth curvature at the midpoint of the geodesic
    // joining the edge's endpoints, in the tangent direction orthogonal to it.
    std::vector<double> k_ref(n_edge, 0.0);
    parallel_for(n_edge, [&](int e) {
      if (!dir.valid[e]) return;
      const auto& ed = s.edge(e);
      const SurfacePath path =
          surface_geodesic(smooth, g.chart_uv[ed.u], g.chart_uv[ed.v], opt.ref_path);
      const SurfaceMidpoint mid = surface_path_midpoint(smooth, path);
      const Vec3 ortho = smooth.frame(mid.uv).normal.cross(mid.tangent);
      k_ref[e] = smooth.directional_curvature(mid.uv, ortho);
    });

    CurvatureReport rep;
    rep.surface = surface;
    rep.resolution = L;
    rep.error_scale = denom;
    rep.mean_abs_hinge_deg = stats.mean_abs_deg;
    rep.max_abs_hinge_deg = stats.max_abs_deg;
    for (int v = 0; v < n_vert; ++v)
      if (pf.valid[v])
        rep.records.push_back({v, "pf-mean", pf.value[v], h_ref[v], pf.value[v] - h_ref[v]});
    for (int v = 0; v < n_vert; ++v)
      if (cot.valid[v])
        rep.records.push_back({v, "cotan", cot.value[v], h_ref[v], cot.value[v] - h_ref[v]});
    for (int e = 0; e < n_edge; ++e)
      if (dir.valid[e])
        rep.records.push_back(
            {e, "pf-directed", dir.value[e], k_ref[e], dir.value[e] - k_ref[e]});
    for (int v = 0; v < n_vert; ++v)
      if (csm.valid[v])
        for (int k = 0; k < 2; ++k)
          rep.records.push_back({v, "csm", csm.principal[v][k], p_ref[v][k],
                                 csm.principal[v][k] - p_ref[v][k]});
    summarize(rep);

    if (!opt.out_dir.empty())
      write_records_csv(rep, join_path(opt.out_dir, "records_" + surface + "_" +
                                                        std::to_string(L) + ".csv"));
    reports.push_back(std::move(rep));
  }

  if (!opt.out_dir.empty()) {
    PlotAxes axes;
    axes.title = surface + ": mean |error| vs mean |hinge angle|";
    axes.x_label = "mean |hinge angle| (degrees)";
    axes.y_label = "mean |error|";
    axes.log_x = axes.log_y = true;
    std::vector<PlotSeries> series;
    const char* methods[] = {"pf-mean", "cotan", "pf-directed", "csm"};
    for (int m = 0; m < 4; ++m) {
      PlotSeries ps;
      ps.label = methods[m];
      ps.color = kPalette[m];
      for (const auto& r : reports) {
        const MethodSummary* s = r.summary(methods[m]);
        if (!s) continue;
        ps.x.push_back(r.mean_abs_hinge_deg);
        ps.y.push_back(s->mean_abs_error);
        ps.bar.push_back(s->stddev_abs_error);
      }
      series.push_back(std::move(ps));
    }
    write_svg_plot(axes, series, join_path(opt.out_dir, "errors_" + surface + ".svg"));
  }
  return reports;
}

void write_euclidean_table(const std::vector<CurvatureReport>& reports,
                           const std::string& path) {
  auto table = open_out(path);
  table << "surface,layers,mean_abs_hinge_deg,max_abs_hinge_deg,"
           "pf_mean_pct,cotan_pct,pf_directed_pct,csm_pct\r\n";
  for (const auto& r : reports)
    table << r.surface << ',' << r.resolution << ',' << fmt(r.mean_abs_hinge_deg) << ','
          << fmt(r.max_abs_hinge_deg) << ',' << fmt(summary_pct(r, "pf-mean")) << ','
          << fmt(summary_pct(r, "cotan")) << ',' << fmt(summary_pct(r, "pf-directed")) << ','
          << fmt(summary_pct(r, "csm")) << "\r\n";
}

namespace {

struct GowdyRow {
  std::string kind;
  int blocks = 0;
  double mean_hinge = 0, max_hinge = 0;
  double pct_mean = 0, pct_dir = 0;
  double pct_type[3] = {0, 0, 0};
};

struct GowdyKindPlots {
  std::string kind;
  Vec3 c_direction = Vec3::Zero();
  std::vector<int> blocks;
  // Row-averaged pf mean curvature per z, and type-c directed points.
  std::vector<std::vector<std::pair<double, double>>> mean_curve;
  std::vector<std::vector<std::pair<double, double>>> c_points;
};

double wrap_z(double z) {
  z = std::fmod(z, 2.0 * kPi);
  return z < 0 ? z + 2.0 * kPi : z;
}

}  // namespace

std::vector<CurvatureReport> run_gowdy_suite(const std::vector<GridKind>& kinds,
                                             const std::vector<int>& blocks,
                                             const GowdySuiteOptions& opt) {
  std::vector<CurvatureReport> reports;
  if (!opt.out_dir.empty()) std::filesystem::create_directories(opt.out_dir);

  const auto metric = make_metric("gowdy");
  const SmoothSurface smooth = make_surface("gowdy-plane");
  std::vector<GowdyRow> rows;
  std::vector<GowdyKindPlots> plots;

  for (GridKind kind : kinds) {
    const bool rect = kind == GridKind::rectangular;
    const std::string kind_name = rect ? "rectangular" : "skew";
    GowdyKindPlots plot;
    plot.kind = kind_name;

    for (int b : blocks) {
      GeodesicSolver solver(metric, opt.bvp);
      const GowdyGrid grid = generate_gowdy_grid(kind, b, solver);
      const SimplicialSurface& s = grid.sampling.surf;
      const LayerPair slabs = build_layers(solver, grid.sampling, opt.delta);
      const HingeField hinges = hinge_angles_from_layers(s, slabs.plus, slabs.minus);
      const HingeStats stats = hinge_angle_stats(hinges);
      // The rectangular grid is not Delaunay; the paper switches duals.
      const DualTessellation dual =
          build_dual(s, rect ? DualKind::barycentric : DualKind::voronoi);
      const VertexField pf = mean_curvature(s, dual, hinges);
      const EdgeField dir = directed_curvature(s, dual, hinges);
      plot.c_direction = grid.step_a + grid.step_b;

      const int n_vert = s.vertex_count(), n_edge = s.edge_count();
      std::vector<double> h_ref(n_vert);
      for (int v = 0; v < n_vert; ++v) h_ref[v] = smooth.mean_curvature(grid.chart_uv[v]);
      // Percentages are relative to the peak smooth mean curvature over the
      // z period, the natural scale of these small-amplitude profiles; a
      // surface-mean principal curvature would overweight the large but
      // opposite-signed principal pair.
      double denom = 0.0;
      for (int i = 0; i < 512; ++i) {
        const double z = 2.0 * kPi * i / 512;
        denom = std::max(denom, std::abs(smooth.mean_curvature({0.0, 3.0 * z / kPi})));
      }

      // Seam-resolved endpoint positions map back to the plane chart as
      // (y, 3 z / pi), so wrap edges get a contiguous geodesic.
      std::vector<double> k_ref(n_edge, 0.0), z_mid(n_edge, 0.0);
      parallel_for(n_edge, [&](int e) {
        if (!dir.valid[e]) return;
        const auto& ends = grid.sampling.edge_endpoint[e];
        const Vec2 ca(ends[0].y(), 3.0 * ends[0].z() / kPi);
        const Vec2 cb(ends[1].y(), 3.0 * ends[1].z() / kPi);
        const SurfacePath path = surface_geodesic(smooth, ca, cb, opt.ref_path);
        const SurfaceMidpoint mid = surface_path_midpoint(smooth, path);
        const Vec3 ortho = metric_cross(*metric, mid.point, smooth.frame(mid.uv).normal,
                                        mid.tangent);
        k_ref[e] = smooth.directional_curvature(mid.uv, ortho);
        z_mid[e] = wrap_z(mid.point.z());
      });

      CurvatureReport rep;
      rep.surface = "gowdy-" + std::string(rect ? "rect" : "skew");
      rep.resolution = b;
      rep.error_scale = denom;
      rep.mean_abs_hinge_deg = stats.mean_abs_deg;
      rep.max_abs_hinge_deg = stats.max_abs_deg;
      for (int v = 0; v < n_vert; ++v)
        if (pf.valid[v])
          rep.records.push_back({v, "pf-mean", pf.value[v], h_ref[v], pf.value[v] - h_ref[v]});
      for (int e = 0; e < n_edge; ++e)
        if (dir.valid[e])
          rep.records.push_back(
              {e, "pf-directed", dir.value[e], k_ref[e], dir.value[e] - k_ref[e]});
      summarize(rep);

      GowdyRow row;
      row.kind = kind_name;
      row.blocks = b;
      row.mean_hinge = stats.mean_abs_deg;
      row.max_hinge = stats.max_abs_deg;
      row.pct_mean = summary_pct(rep, "pf-mean");
      row.pct_dir = summary_pct(rep, "pf-directed");
      for (int type = 0; type < 3; ++type) {
        double sum = 0.0;
        int count = 0;
        for (int e = 0; e < n_edge; ++e) {
          if (!dir.valid[e] || grid.edge_type[e] != type) continue;
          sum += std::abs(dir.value[e] - k_ref[e]);
          ++count;
        }
        row.pct_type[type] = count && denom > 0 ? 100.0 * (sum / count) / denom : 0.0;
      }
      rows.push_back(row);

      if (!opt.out_dir.empty()) {
        const std::string tag = kind_name + "_" + std::to_string(b);
        write_records_csv(rep, join_path(opt.out_dir, "records_gowdy_" + tag + ".csv"));

        // Mean profile: one row per vertex ordered by (z, id).
        std::vector<int> order(n_vert);
        for (int v = 0; v < n_vert; ++v) order[v] = v;
        std::sort(order.begin(), order.end(), [&](int a, int c) {
          const double za = grid.sampling.position[a].z(), zc = grid.sampling.position[c].z();
          return za != zc ? za < zc : a < c;
        });
        auto mean_out = open_out(join_path(opt.out_dir, "profile_mean_" + tag + ".csv"));
        mean_out << "z,estimate,reference\r\n";
        for (int v : order)
          mean_out << fmt(grid.sampling.position[v].z()) << ',' << fmt(pf.value[v]) << ','
                   << fmt(h_ref[v]) << "\r\n";

        std::vector<int> eorder;
        for (int e = 0; e < n_edge; ++e)
          if (dir.valid[e]) eorder.push_back(e);
        std::sort(eorder.begin(), eorder.end(), [&](int a, int c) {
          if (grid.edge_type[a] != grid.edge_type[c])
            return grid.edge_type[a] < grid.edge_type[c];
          return z_mid[a] != z_mid[c] ? z_mid[a] < z_mid[c] : a < c;
        });
        auto dir_out = open_out(join_path(opt.out_dir, "profile_directed_" + tag + ".csv"));
        dir_out << "type,z,estimate,reference\r\n";
        for (int e : eorder)
          dir_out << char('a' + grid.edge_type[e]) << ',' << fmt(z_mid[e]) << ','
                  << fmt(dir.value[e]) << ',' << fmt(k_ref[e]) << "\r\n";
      }

      // Row-averaged mean-curvature curve and type-c points for the plots.
      std::vector<std::pair<double, double>> curve;
      {
        std::vector<std::pair<double, double>> zs(n_vert);
        for (int v = 0; v < n_vert; ++v) zs[v] = {grid.sampling.position[v].z(), pf.value[v]};
        std::sort(zs.begin(), zs.end());
        for (std::size_t i = 0; i < zs.size();) {
          std::size_t j = i;
          double sum = 0.0;
          while (j < zs.size() && zs[j].first - zs[i].first < 1e-9) sum += zs[j++].second;
          curve.push_back({zs[i].first, sum / double(j - i)});
          i = j;
        }
        if (!curve.empty()) curve.push_back({curve.front().first + 2.0 * kPi, curve.front().second});
      }
      plot.mean_curve.push_back(std::move(curve));
      std::vector<std::pair<double, double>> cpts;
      for (int e = 0; e < n_edge; ++e)
        if (dir.valid[e] && grid.edge_type[e] == 2) cpts.push_back({z_mid[e], dir.value[e]});
      std::sort(cpts.begin(), cpts.end());
      plot.c_points.push_back(std::move(cpts));
      plot.blocks.push_back(b);

      reports.push_back(std::move(rep));
    }
    plots.push_back(std::move(plot));
  }

  if (!opt.out_dir.empty()) {
    auto table = open_out(join_path(opt.out_dir, "table3.csv"));
    table << "kind,blocks,mean_abs_hinge_deg,max_abs_hinge_deg,pf_mean_pct,pf_directed_pct,"
             "directed_a_pct,directed_b_pct,directed_c_pct\r\n";
    for (const auto& r : rows)
      table << r.kind << ',' << r.blocks << ',' << fmt(r.mean_hinge) << ',' << fmt(r.max_hinge)
            << ',' << fmt(r.pct_mean) << ',' << fmt(r.pct_dir) << ',' << fmt(r.pct_type[0])
            << ',' << fmt(r.pct_type[1]) << ',' << fmt(r.pct_type[2]) << "\r\n";

    for (const auto& plot : plots) {
      PlotAxes axes;
      axes.title = "gowdy " + plot.kind + ": mean curvature along z";
      axes.x_label = "z";
      axes.y_label = "H";
      std::vector<PlotSeries> series;
      for (std::size_t i = 0; i < plot.blocks.size(); ++i) {
        PlotSeries ps;
        ps.label = std::to_string(plot.blocks[i]) + " blocks";
        ps.color = kPalette[i % 6];
        for (const auto& p : plot.mean_curve[i]) {
          ps.x.push_back(p.first);
          ps.y.push_back(p.second);
        }
        series.push_back(std::move(ps));
      }
      PlotSeries sm;
      sm.label = "smooth";
      sm.color = "#000000";
      sm.draw_markers = false;
      for (int i = 0; i <= 256; ++i) {
        const double z = 2.0 * kPi * i / 256;
        sm.x.push_back(z);
        sm.y.push_back(smooth.mean_curvature({0.0, 3.0 * z / kPi}));
      }
      series.push_back(std::move(sm));
      write_svg_plot(axes, series, join_path(opt.out_dir, "gowdy_" + plot.kind + "_mean.svg"));

      axes.title = "gowdy " + plot.kind + ": directed curvature at the diagonal edges";
      axes.y_label = "kappa";
      series.clear();
      for (std::size_t i = 0; i < plot.blocks.size(); ++i) {
        if (plot.blocks[i] < 24 && plot.blocks.size() > 2) continue;
        PlotSeries ps;
        ps.label = std::to_string(plot.blocks[i]) + " blocks";
        ps.color = kPalette[i % 6];
        for (const auto& p : plot.c_points[i]) {
          ps.x.push_back(p.first);
          ps.y.push_back(p.second);
        }
        series.push_back(std::move(ps));
      }
      PlotSeries smc;
      smc.label = "smooth";
      smc.color = "#000000";
      smc.draw_markers = false;
      for (int i = 0; i <= 256; ++i) {
        const double z = 2.0 * kPi * i / 256;
        const Vec2 uv(0.0, 3.0 * z / kPi);
        const Vec3 p = smooth.position(uv);
        const Vec3 ortho =
            metric_cross(*metric, p, smooth.frame(uv).normal, plot.c_direction);
        smc.x.push_back(z);
        smc.y.push_back(smooth.directional_curvature(uv, ortho));
      }
      series.push_back(std::move(smc));
      write_svg_plot(axes, series,
                     join_path(opt.out_dir, "gowdy_" + plot.kind + "_directed_c.svg"));
    }
  }
  return reports;
}

}  // namespace pfcurv
