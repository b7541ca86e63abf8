#include "pfcurv/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pfcurv/errors.hpp"

namespace pfcurv {
namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Quotes only when RFC-4180 requires it.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  q += '"';
  return q;
}

// Splits one logical CSV record; the stream supplies continuation lines when
// a quoted field spans a newline.
std::vector<std::string> read_csv_row(std::istream& in, bool& ok) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false, any = false;
  int c;
  while ((c = in.get()) != EOF) {
    any = true;
    if (quoted) {
      if (c == '"') {
        if (in.peek() == '"') {
          field += '"';
          in.get();
        } else {
          quoted = false;
        }
      } else {
        field += char(c);
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c == '\n') {
      break;
    } else if (c != '\r') {
      field += char(c);
    }
  }
  ok = any;
  if (any) fields.push_back(field);
  return fields;
}

double to_double(const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str()) throw IoError("records csv: bad number: " + s);
  return v;
}

}  // namespace

const MethodSummary* CurvatureReport::summary(const std::string& method) const {
  for (const auto& s : summaries)
    if (s.method == method) return &s;
  return nullptr;
}

void summarize(CurvatureReport& r) {
  r.summaries.clear();
  for (const auto& rec : r.records) {
    MethodSummary* s = nullptr;
    for (auto& cand : r.summaries)
      if (cand.method == rec.method) s = &cand;
    if (!s) {
      r.summaries.push_back({rec.method, 0, 0.0, 0.0, 0.0});
      s = &r.summaries.back();
    }
    s->count += 1;
    s->mean_abs_error += std::abs(rec.error);
  }
  for (auto& s : r.summaries) {
    s.mean_abs_error /= s.count;
    double var = 0.0;
    for (const auto& rec : r.records) {
      if (rec.method != s.method) continue;
      const double d = std::abs(rec.error) - s.mean_abs_error;
      var += d * d;
    }
    s.stddev_abs_error = std::sqrt(var / s.count);
    s.pct_of_scale =
        r.error_scale > 0.0 ? 100.0 * s.mean_abs_error / r.error_scale : 0.0;
  }
}

void write_records_csv(const CurvatureReport& r, std::ostream& out) {
  out << "surface,resolution,error_scale,mean_abs_hinge_deg,max_abs_hinge_deg,"
         "element,method,estimate,reference,error\r\n";
  for (const auto& rec : r.records) {
    out << csv_field(r.surface) << ',' << r.resolution << ',' << fmt(r.error_scale)
        << ',' << fmt(r.mean_abs_hinge_deg) << ',' << fmt(r.max_abs_hinge_deg) << ','
        << rec.element << ',' << csv_field(rec.method) << ',' << fmt(rec.estimate) << ','
        << fmt(rec.reference) << ',' << fmt(rec.error) << "\r\n";
  }
}

void write_records_csv(const CurvatureReport& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  write_records_csv(r, out);
}

CurvatureReport read_records_csv(std::istream& in) {
  CurvatureReport r;
  bool ok = false;
  auto header = read_csv_row(in, ok);
  if (!ok || header.size() != 10) throw IoError("records csv: bad header");
  bool first = true;
  for (;;) {
    auto row = read_csv_row(in, ok);
    if (!ok) break;
    if (row.size() == 1 && row[0].empty()) continue;
    if (row.size() != 10) throw IoError("records csv: expected 10 fields");
    if (first) {
      r.surface = row[0];
      r.resolution = int(to_double(row[1]));
      r.error_scale = to_double(row[2]);
      r.mean_abs_hinge_deg = to_double(row[3]);
      r.max_abs_hinge_deg = to_double(row[4]);
      first = false;
    }
    CurvatureRecord rec;
    rec.element = int(to_double(row[5]));
    rec.method = row[6];
    rec.estimate = to_double(row[7]);
    rec.reference = to_double(row[8]);
    rec.error = to_double(row[9]);
    r.records.push_back(std::move(rec));
  }
  summarize(r);
  return r;
}

CurvatureReport read_records_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_records_csv(in);
}

void write_summary_csv(const std::vector<CurvatureReport>& reports, std::ostream& out) {
  out << "surface,resolution,method,count,mean_abs_error,stddev_abs_error,"
         "pct_of_scale,mean_abs_hinge_deg,max_abs_hinge_deg\r\n";
  for (const auto& r : reports)
    for (const auto& s : r.summaries)
      out << csv_field(r.surface) << ',' << r.resolution << ',' << csv_field(s.method) << ','
          << s.count << ',' << fmt(s.mean_abs_error) << ',' << fmt(s.stddev_abs_error) << ','
          << fmt(s.pct_of_scale) << ',' << fmt(r.mean_abs_hinge_deg) << ','
          << fmt(r.max_abs_hinge_deg) << "\r\n";
}

void write_summary_csv(const std::vector<CurvatureReport>& reports, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  write_summary_csv(reports, out);
}

}  // namespace pfcurv
