#ifndef EVOGAIN_SVG_HPP
#define EVOGAIN_SVG_HPP

#include <string>
#include <vector>

namespace evogain {

struct PlotSeries {
  std::string label;
  std::string color;  // SVG color, e.g. "#0072bd"
  std::vector<double> t;
  std::vector<double> y;
};

/// Writes a self-contained SVG line plot (axes, ticks, legend, polylines).
/// No external renderer is involved; the output is a complete document.
void write_line_plot_svg(const std::string& path, const std::string& title,
                         const std::string& x_label,
                         const std::vector<PlotSeries>& series);

}  // namespace evogain

#endif  // EVOGAIN_SVG_HPP
