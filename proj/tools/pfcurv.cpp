// Command-line driver for the curvature experiments.
//
//   pfcurv gen     write experiment meshes (OFF + intrinsic format)
//   pfcurv euclid  Euclidean-surface comparison suite -> table2.csv
//   pfcurv gowdy   wave-metric grid suite -> table3.csv
//   pfcurv report  re-summarize a records CSV
//
// Exit codes: 0 success, 2 invalid arguments, 3 numerical failure (the
// failing element is named on stderr).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pfcurv/embedding.hpp"
#include "pfcurv/errors.hpp"
#include "pfcurv/generators.hpp"
#include "pfcurv/geodesic.hpp"
#include "pfcurv/ism.hpp"
#include "pfcurv/metric.hpp"
#include "pfcurv/report.hpp"
#include "pfcurv/smooth.hpp"
#include "pfcurv/suite.hpp"

namespace {

using namespace pfcurv;

struct DualChoice {
  DualKind kind = DualKind::voronoi;
  bool mixed_fallback = true;
};

DualChoice parse_dual(const std::string& name) {
  if (name == "voronoi") return {DualKind::voronoi, false};
  if (name == "mixed") return {DualKind::voronoi, true};
  if (name == "barycentric") return {DualKind::barycentric, false};
  throw InvalidInput("unknown dual kind: " + name);
}

GridKind parse_grid(const std::string& name) {
  if (name == "rect") return GridKind::rectangular;
  if (name == "skew") return GridKind::skew;
  throw InvalidInput("unknown grid kind: " + name);
}

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
  std::filesystem::create_directories(dir);
}

void run_gen(const std::vector<std::string>& surfaces, const std::vector<int>& layers,
             const std::vector<std::string>& grids, const std::vector<int>& blocks,
             bool rescale, const std::string& out_dir) {
  ensure_dir(out_dir);
  for (const std::string& surface : surfaces) {
    const SmoothSurface smooth = make_surface(surface);
    const double target = rescale ? smooth_surface_area(smooth) : 0.0;
    for (int L : layers) {
      GeneratedSurface g = generate_layered_surface(surface, L);
      const EmbeddedSurface es = rescale ? rescale_to_area(g.embedded, target) : g.embedded;
      const std::string stem = surface + "_" + std::to_string(L);
      write_off(es, join_path(out_dir, stem + ".off"));
      write_ism(es.surface, join_path(out_dir, stem + ".ism"));
      std::printf("%s: V=%d E=%d F=%d\n", stem.c_str(), es.surface.vertex_count(),
                  es.surface.edge_count(), es.surface.triangle_count());
    }
  }
  for (const std::string& grid : grids) {
    const GridKind kind = parse_grid(grid);
    const auto metric = make_metric("gowdy");
    for (int b : blocks) {
      GeodesicSolver solver(metric);
      const GowdyGrid g = generate_gowdy_grid(kind, b, solver);
      const std::string stem = "gowdy_" + grid + "_" + std::to_string(b);
      write_ism(g.sampling.surf, join_path(out_dir, stem + ".ism"));
      std::printf("%s: V=%d E=%d F=%d\n", stem.c_str(), g.sampling.surf.vertex_count(),
                  g.sampling.surf.edge_count(), g.sampling.surf.triangle_count());
    }
  }
}

void run_euclid(const std::vector<std::string>& surfaces, const std::vector<int>& layers,
                const std::string& dual, bool rescale, const std::string& out_dir) {
  EuclideanSuiteOptions opt;
  const DualChoice d = parse_dual(dual);
  opt.dual = d.kind;
  opt.mixed_fallback = d.mixed_fallback;
  opt.rescale_area = rescale;
  opt.out_dir = out_dir;
  if (!out_dir.empty()) ensure_dir(out_dir);

  std::vector<CurvatureReport> all;
  for (const std::string& surface : surfaces) {
    auto reports = run_euclidean_suite(surface, layers, opt);
    for (auto& r : reports) all.push_back(std::move(r));
  }
  std::printf("%-16s %6s %10s %10s %9s %9s %9s %9s\n", "surface", "layers", "hinge(deg)",
              "max(deg)", "pf%", "cotan%", "dir%", "csm%");
  for (const auto& r : all) {
    auto pct = [&](const char* m) {
      const MethodSummary* s = r.summary(m);
      return s ? s->pct_of_scale : 0.0;
    };
    std::printf("%-16s %6d %10.4g %10.4g %9.3g %9.3g %9.3g %9.3g\n", r.surface.c_str(),
                r.resolution, r.mean_abs_hinge_deg, r.max_abs_hinge_deg, pct("pf-mean"),
                pct("cotan"), pct("pf-directed"), pct("csm"));
  }
  if (!out_dir.empty()) write_euclidean_table(all, join_path(out_dir, "table2.csv"));
}

void run_gowdy(const std::vector<std::string>& grids, const std::vector<int>& blocks,
               double delta, const std::string& out_dir) {
  GowdySuiteOptions opt;
  opt.delta = delta;
  opt.out_dir = out_dir;
  if (!out_dir.empty()) ensure_dir(out_dir);

  std::vector<GridKind> kinds;
  for (const std::string& g : grids) kinds.push_back(parse_grid(g));
  const auto reports = run_gowdy_suite(kinds, blocks, opt);

  std::printf("%-12s %6s %10s %10s %9s %9s\n", "grid", "blocks", "hinge(deg)", "max(deg)",
              "mean%", "dir%");
  for (const auto& r : reports) {
    auto pct = [&](const char* m) {
      const MethodSummary* s = r.summary(m);
      return s ? s->pct_of_scale : 0.0;
    };
    std::printf("%-12s %6d %10.4g %10.4g %9.3g %9.3g\n", r.surface.c_str(), r.resolution,
                r.mean_abs_hinge_deg, r.max_abs_hinge_deg, pct("pf-mean"), pct("pf-directed"));
  }
}

void run_report(const std::string& in_path, const std::string& out_path) {
  CurvatureReport rep = read_records_csv(in_path);
  summarize(rep);
  if (!out_path.empty()) {
    write_summary_csv({rep}, out_path);
    return;
  }
  std::printf("%s at resolution %d: %zu records, scale %.6g, hinges %.4g/%.4g deg\n",
              rep.surface.c_str(), rep.resolution, rep.records.size(), rep.error_scale,
              rep.mean_abs_hinge_deg, rep.max_abs_hinge_deg);
  for (const auto& s : rep.summaries) {
    std::printf("  %-12s n=%-6d mean|err|=%-12.6g sd=%-12.6g %.4g%% of scale\n",
                s.method.c_str(), s.count, s.mean_abs_error, s.stddev_abs_error,
                s.pct_of_scale);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"piecewise flat curvature experiments"};
  app.require_subcommand(1);

  const std::vector<std::string> all_surfaces{"modified-sphere", "peanut"};
  const std::vector<int> all_layers{6, 10, 14, 18, 22};
  const std::vector<std::string> all_grids{"rect", "skew"};
  const std::vector<int> all_blocks{6, 12, 24, 48};

  // gen
  auto* gen = app.add_subcommand("gen", "write experiment meshes");
  std::vector<std::string> gen_surfaces;
  std::vector<int> gen_layers = all_layers;
  std::vector<std::string> gen_grids;
  std::vector<int> gen_blocks = all_blocks;
  bool gen_rescale = false;
  std::string gen_out = "out";
  gen->add_option("--surface", gen_surfaces, "layered surfaces to mesh")
      ->delimiter(',')
      ->check(CLI::IsMember({"modified-sphere", "peanut", "round-sphere"}));
  gen->add_option("--layers", gen_layers, "layer counts")->delimiter(',');
  gen->add_option("--grid", gen_grids, "wave-metric grids to mesh")
      ->delimiter(',')
      ->check(CLI::IsMember({"rect", "skew"}));
  gen->add_option("--blocks", gen_blocks, "grid block counts")->delimiter(',');
  gen->add_flag("--rescale-area", gen_rescale, "scale meshes to the smooth surface area");
  gen->add_option("--out", gen_out, "output directory");

  // euclid
  auto* euclid = app.add_subcommand("euclid", "Euclidean-surface comparison suite");
  std::vector<std::string> euclid_surfaces = all_surfaces;
  std::vector<int> euclid_layers = all_layers;
  std::string euclid_dual = "mixed";
  bool euclid_rescale = false;
  std::string euclid_out = "out";
  euclid->add_option("--surface", euclid_surfaces, "surfaces to run")
      ->delimiter(',')
      ->check(CLI::IsMember({"modified-sphere", "peanut", "round-sphere"}));
  euclid->add_option("--layers", euclid_layers, "layer counts")->delimiter(',');
  euclid->add_option("--dual", euclid_dual, "dual tessellation")
      ->check(CLI::IsMember({"voronoi", "mixed", "barycentric"}));
  euclid->add_flag("--rescale-area", euclid_rescale,
                   "scale meshes to the smooth surface area before estimating");
  euclid->add_option("--out", euclid_out, "output directory ('' disables files)");

  // gowdy
  auto* gowdy = app.add_subcommand("gowdy", "wave-metric grid suite");
  std::vector<std::string> gowdy_grids = all_grids;
  std::vector<int> gowdy_blocks = all_blocks;
  double gowdy_delta = 0.0;
  std::string gowdy_out = "out";
  gowdy->add_option("--grid", gowdy_grids, "grid kinds")
      ->delimiter(',')
      ->check(CLI::IsMember({"rect", "skew"}));
  gowdy->add_option("--blocks", gowdy_blocks, "block counts")->delimiter(',');
  gowdy->add_option("--delta", gowdy_delta, "layer offset (0 = half the mean edge)");
  gowdy->add_option("--out", gowdy_out, "output directory ('' disables files)");

  // report
  auto* report = app.add_subcommand("report", "re-summarize a records CSV");
  std::string report_in, report_out;
  report->add_option("--in", report_in, "records CSV to read")->required();
  report->add_option("--out", report_out, "summary CSV to write (default: print)");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) {
      if (gen_surfaces.empty() && gen_grids.empty()) gen_surfaces = all_surfaces;
      run_gen(gen_surfaces, gen_layers, gen_grids, gen_blocks, gen_rescale, gen_out);
    } else if (euclid->parsed()) {
      run_euclid(euclid_surfaces, euclid_layers, euclid_dual, euclid_rescale, euclid_out);
    } else if (gowdy->parsed()) {
      run_gowdy(gowdy_grids, gowdy_blocks, gowdy_delta, gowdy_out);
    } else if (report->parsed()) {
      run_report(report_in, report_out);
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
