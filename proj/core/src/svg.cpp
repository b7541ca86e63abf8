#include "pfcurv/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "pfcurv/errors.hpp"

namespace pfcurv {
namespace {

constexpr double kWidth = 720, kHeight = 540;
constexpr double kLeft = 78, kRight = 24, kTop = 46, kBottom = 58;

std::string esc(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '&')
      r += "&amp;";
    else if (c == '<')
      r += "&lt;";
    else if (c == '>')
      r += "&gt;";
    else
      r += c;
  }
  return r;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Axis {
  bool log = false;
  double lo = 0, hi = 1;  // transformed (log10 when log) data range
  double p0 = 0, p1 = 1;  // pixel range

  double tf(double v) const { return log ? std::log10(v) : v; }
  bool usable(double v) const { return std::isfinite(v) && (!log || v > 0); }
  double px(double v) const { return p0 + (tf(v) - lo) / (hi - lo) * (p1 - p0); }

  // Tick positions in data coordinates: decades on log axes, 1/2/5 steps on
  // linear ones.
  std::vector<double> ticks() const {
    std::vector<double> t;
    if (log) {
      for (int e = int(std::floor(lo)); e <= int(std::ceil(hi)); ++e) {
        const double v = std::pow(10.0, e);
        if (std::log10(v) > lo - 1e-9 && std::log10(v) < hi + 1e-9) t.push_back(v);
      }
      if (t.size() < 2)
        for (int e = int(std::floor(lo)); e <= int(std::ceil(hi)); ++e)
          for (int m : {2, 5}) {
            const double v = m * std::pow(10.0, e);
            if (std::log10(v) > lo - 1e-9 && std::log10(v) < hi + 1e-9) t.push_back(v);
          }
      std::sort(t.begin(), t.end());
      return t;
    }
    const double span = hi - lo;
    double step = std::pow(10.0, std::floor(std::log10(span / 5)));
    if (span / step > 10)
      step *= 5;
    else if (span / step > 5)
      step *= 2;
    for (double v = std::ceil(lo / step) * step; v <= hi + step * 1e-9; v += step)
      t.push_back(std::abs(v) < step * 1e-9 ? 0.0 : v);
    return t;
  }
};

}  // namespace

void write_svg_plot(const PlotAxes& axes, const std::vector<PlotSeries>& series,
                    std::ostream& out) {
  Axis ax{axes.log_x}, ay{axes.log_y};
  double xlo = std::numeric_limits<double>::infinity(), xhi = -xlo;
  double ylo = xlo, yhi = -xlo;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!ax.usable(s.x[i]) || !ay.usable(s.y[i])) continue;
      xlo = std::min(xlo, ax.tf(s.x[i]));
      xhi = std::max(xhi, ax.tf(s.x[i]));
      const double b = i < s.bar.size() && s.bar[i] > 0 ? s.bar[i] : 0;
      for (double v : {s.y[i] - b, s.y[i] + b})
        if (ay.usable(v)) {
          ylo = std::min(ylo, ay.tf(v));
          yhi = std::max(yhi, ay.tf(v));
        }
    }
  if (!(xlo <= xhi)) xlo = 0, xhi = 1;
  if (!(ylo <= yhi)) ylo = 0, yhi = 1;
  if (xhi - xlo < 1e-12) xlo -= 0.5, xhi += 0.5;
  if (yhi - ylo < 1e-12) ylo -= 0.5, yhi += 0.5;
  const double mx = 0.04 * (xhi - xlo), my = 0.06 * (yhi - ylo);
  ax.lo = xlo - mx, ax.hi = xhi + mx, ax.p0 = kLeft, ax.p1 = kWidth - kRight;
  ay.lo = ylo - my, ay.hi = yhi + my, ay.p0 = kHeight - kBottom, ay.p1 = kTop;

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g font-family=\"Helvetica,Arial,sans-serif\" font-size=\"13\">\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">"
      << esc(axes.title) << "</text>\n";

  for (double v : ax.ticks()) {
    const double p = ax.px(v);
    out << "<line x1=\"" << num(p) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(p)
        << "\" y2=\"" << num(kHeight - kBottom) << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << num(p) << "\" y=\"" << num(kHeight - kBottom + 18)
        << "\" text-anchor=\"middle\">" << tick_label(v) << "</text>\n";
  }
  for (double v : ay.ticks()) {
    const double p = ay.px(v);
    out << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(p) << "\" x2=\""
        << num(kWidth - kRight) << "\" y2=\"" << num(p) << "\" stroke=\"#dddddd\"/>\n"
        << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(p + 4)
        << "\" text-anchor=\"end\">" << tick_label(v) << "</text>\n";
  }
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\""
      << kWidth - kLeft - kRight << "\" height=\"" << kHeight - kTop - kBottom
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 14
      << "\" text-anchor=\"middle\">" << esc(axes.x_label) << "</text>\n";
  out << "<text x=\"20\" y=\"" << kHeight / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << kHeight / 2 << ")\">" << esc(axes.y_label) << "</text>\n";

  for (const auto& s : series) {
    std::vector<std::pair<double, double>> pts;
    std::vector<double> bars;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!ax.usable(s.x[i]) || !ay.usable(s.y[i])) continue;
      pts.emplace_back(ax.px(s.x[i]), ay.px(s.y[i]));
      bars.push_back(i < s.bar.size() ? s.bar[i] : 0);
    }
    std::size_t k = 0;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!ax.usable(s.x[i]) || !ay.usable(s.y[i])) continue;
      const double b = bars[k];
      if (b > 0) {
        const double x = pts[k].first;
        double y0 = s.y[i] - b, y1 = s.y[i] + b;
        if (!ay.usable(y0)) y0 = s.y[i];
        const double py0 = ay.px(y0), py1 = ay.px(y1);
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(py0) << "\" x2=\"" << num(x)
            << "\" y2=\"" << num(py1) << "\" stroke=\"" << s.color << "\"/>\n"
            << "<line x1=\"" << num(x - 4) << "\" y1=\"" << num(py0) << "\" x2=\""
            << num(x + 4) << "\" y2=\"" << num(py0) << "\" stroke=\"" << s.color << "\"/>\n"
            << "<line x1=\"" << num(x - 4) << "\" y1=\"" << num(py1) << "\" x2=\""
            << num(x + 4) << "\" y2=\"" << num(py1) << "\" stroke=\"" << s.color << "\"/>\n";
      }
      ++k;
    }
    if (s.draw_line && pts.size() > 1) {
      out << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
      for (const auto& p : pts) out << num(p.first) << ',' << num(p.second) << ' ';
      out << "\"/>\n";
    }
    if (s.draw_markers)
      for (const auto& p : pts)
        out << "<circle cx=\"" << num(p.first) << "\" cy=\"" << num(p.second)
            << "\" r=\"3\" fill=\"" << s.color << "\"/>\n";
  }

  double ly = kTop + 16;
  for (const auto& s : series) {
    if (s.label.empty()) continue;
    const double lx = kWidth - kRight - 170;
    out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\"" << num(lx + 26)
        << "\" y2=\"" << num(ly - 4) << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << num(lx + 32) << "\" y=\"" << num(ly) << "\">" << esc(s.label)
        << "</text>\n";
    ly += 18;
  }
  out << "</g>\n</svg>\n";
}

void write_svg_plot(const PlotAxes& axes, const std::vector<PlotSeries>& series,
                    const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  write_svg_plot(axes, series, out);
}

}  // namespace pfcurv
