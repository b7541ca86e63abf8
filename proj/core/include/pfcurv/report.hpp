#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfcurv {

// One curvature estimate against its smooth reference. element is a vertex
// id for the vertex methods (pf-mean, cotan, csm) and an edge id for
// pf-directed; csm carries two records per vertex, one per principal value.
struct CurvatureRecord {
  int element = -1;
  std::string method;
  double estimate = 0.0;
  double reference = 0.0;
  double error = 0.0;  // estimate - reference
};

// Per-method aggregate over one mesh. stddev is the population deviation of
// |error| about its mean; pct_of_scale divides by the report denominator.
struct MethodSummary {
  std::string method;
  int count = 0;
  double mean_abs_error = 0.0;
  double stddev_abs_error = 0.0;
  double pct_of_scale = 0.0;
};

// Every method on one mesh compared against the smooth surface.
struct CurvatureReport {
  std::string surface;
  int resolution = 0;               // layer or block count
  double error_scale = 0.0;  // percentage denominator
  double mean_abs_hinge_deg = 0.0;
  double max_abs_hinge_deg = 0.0;
  std::vector<CurvatureRecord> records;
  std::vector<MethodSummary> summaries;

  // Null when the method has no summary row.
  const MethodSummary* summary(const std::string& method) const;
};

// Rebuilds summaries from records; methods keep first-appearance order.
void summarize(CurvatureReport& r);

// RFC-4180 CSV ('.' decimal, 12 significant digits, CRLF rows). The records
// file is self-contained: the mesh-level fields repeat on every row so the
// reader can rebuild the whole report, summaries included.
void write_records_csv(const CurvatureReport& r, std::ostream& out);
void write_records_csv(const CurvatureReport& r, const std::string& path);
CurvatureReport read_records_csv(std::istream& in);
CurvatureReport read_records_csv(const std::string& path);

// One row per (report, method): surface, resolution, method, count,
// mean |error|, stddev, percent of the report scale, mean/max |phi| degrees.
void write_summary_csv(const std::vector<CurvatureReport>& reports, std::ostream& out);
void write_summary_csv(const std::vector<CurvatureReport>& reports, const std::string& path);

}  // namespace pfcurv
