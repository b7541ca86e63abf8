#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pfcurv {

// One plotted series: points in data coordinates, optional symmetric error
// bars (entries <= 0 draw none; empty vector means no bars at all) and an
// optional polyline through the points in the given order.
struct PlotSeries {
  std::string label;
  std::string color = "#1f77b4";
  bool draw_line = true;
  bool draw_markers = true;
  std::vector<double> x, y, bar;
};

struct PlotAxes {
  std::string title, x_label, y_label;
  bool log_x = false, log_y = false;
};

// Standalone SVG chart on a fixed 720x540 canvas: nice-number ticks on
// linear axes, decade ticks on log axes, legend in the top-right corner.
// Non-finite points, and non-positive ones on log axes, are dropped.
void write_svg_plot(const PlotAxes& axes, const std::vector<PlotSeries>& series,
                    std::ostream& out);
void write_svg_plot(const PlotAxes& axes, const std::vector<PlotSeries>& series,
                    const std::string& path);

}  // namespace pfcurv
