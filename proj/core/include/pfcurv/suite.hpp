#pragma once

#include <string>
#include <vector>

#include "pfcurv/dual.hpp"
#include "pfcurv/generators.hpp"
#include "pfcurv/geodesic.hpp"
#include "pfcurv/report.hpp"
#include "pfcurv/smooth.hpp"

namespace pfcurv {

// Comparison run on layered triangulations of a radial surface: pf-mean,
// cotan, pf-directed and csm against the smooth curvatures they approximate.
// Writes a per-resolution records CSV and an error-vs-hinge-angle scatter
// when out_dir is set; combine reports across surfaces with
// write_euclidean_table. Suites honour the PFCURV_THREADS cap and produce
// identical results at any thread count.
struct EuclideanSuiteOptions {
  DualKind dual = DualKind::voronoi;
  bool mixed_fallback = true;
  // Scale positions by sqrt(smooth area / mesh area) before estimating.
  // Hinge angles are scale-invariant but curvatures are not: meshes with
  // vertices on the surface are inscribed and otherwise carry a uniform
  // curvature excess (their chords cut inside the smooth surface).
  bool rescale_area = false;
  PathOptions ref_path{32, 256, 1e-9, 60};  // reference geodesics
  std::string out_dir;                      // empty writes nothing
};

std::vector<CurvatureReport> run_euclidean_suite(const std::string& surface,
                                                 const std::vector<int>& layers,
                                                 const EuclideanSuiteOptions& opt = {});

// One row per report: hinge stats and the four methods' percentage errors.
void write_euclidean_table(const std::vector<CurvatureReport>& reports,
                           const std::string& path);

// Chart-domain area of the smooth surface by midpoint quadrature.
double smooth_surface_area(const SmoothSurface& smooth);

// Uniformly scaled copy whose total triangle area equals target_area.
EmbeddedSurface rescale_to_area(const EmbeddedSurface& es, double target_area);

// Comparison run on the tilted plane in the Gowdy space: hinge angles
// through the two-sided layer construction, then pf-mean per vertex and
// pf-directed per edge against the smooth plane. The rectangular grid is not
// Delaunay and uses barycentric duals; the skew grid uses Voronoi duals.
// Writes table3.csv, per-grid records and z-profile CSVs, and per-kind
// profile plots when out_dir is set.
struct GowdySuiteOptions {
  double delta = 0.0;                       // layer offset; <= 0 picks half the mean edge
  PathOptions bvp;                          // ambient boundary-value solves
  PathOptions ref_path{32, 256, 1e-9, 60};  // reference geodesics on the plane
  std::string out_dir;
};

std::vector<CurvatureReport> run_gowdy_suite(const std::vector<GridKind>& kinds,
                                             const std::vector<int>& blocks,
                                             const GowdySuiteOptions& opt = {});

}  // namespace pfcurv
