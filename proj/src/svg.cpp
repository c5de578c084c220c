#include "evogain/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace evogain {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 64.0;
constexpr double kRight = 24.0;
constexpr double kTop = 36.0;
constexpr double kBottom = 48.0;
constexpr std::size_t kMaxPoints = 2000;

// Round tick spacing to 1/2/5 times a power of ten.
double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(1, target_ticks);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  const double frac = raw / mag;
  double nice = 10.0;
  if (frac <= 1.0) nice = 1.0;
  else if (frac <= 2.0) nice = 2.0;
  else if (frac <= 5.0) nice = 5.0;
  return nice * mag;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

void write_line_plot_svg(const std::string& path, const std::string& title,
                         const std::string& x_label,
                         const std::vector<PlotSeries>& series) {
  double t_min = std::numeric_limits<double>::infinity();
  double t_max = -t_min;
  double y_min = t_min;
  double y_max = -t_min;
  for (const PlotSeries& s : series) {
    for (double v : s.t) {
      t_min = std::min(t_min, v);
      t_max = std::max(t_max, v);
    }
    for (double v : s.y) {
      y_min = std::min(y_min, v);
      y_max = std::max(y_max, v);
    }
  }
  if (!(t_max > t_min)) t_max = t_min + 1.0;
  if (!(y_max > y_min)) y_max = y_min + 1.0;
  y_min = std::min(y_min, 0.0);
  const double y_pad = 0.05 * (y_max - y_min);
  y_max += y_pad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  const auto px = [&](double t) { return kLeft + pw * (t - t_min) / (t_max - t_min); };
  const auto py = [&](double y) { return kTop + ph * (1.0 - (y - y_min) / (y_max - y_min)); };

  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
      << kHeight << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"15\">" << title << "</text>\n";

  // Axes and grid.
  const double x_step = nice_step(t_max - t_min, 6);
  const double y_step = nice_step(y_max - y_min, 5);
  out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333\">\n";
  for (double t = std::ceil(t_min / x_step) * x_step; t <= t_max + 1e-12 * x_step;
       t += x_step) {
    const double X = px(t);
    out << "<line x1=\"" << X << "\" y1=\"" << kTop << "\" x2=\"" << X
        << "\" y2=\"" << kTop + ph << "\" stroke=\"#e0e0e0\"/>\n";
    out << "<text x=\"" << X << "\" y=\"" << kTop + ph + 16
        << "\" text-anchor=\"middle\">" << num(t) << "</text>\n";
  }
  for (double y = std::ceil(y_min / y_step) * y_step; y <= y_max + 1e-12 * y_step;
       y += y_step) {
    const double Y = py(y);
    out << "<line x1=\"" << kLeft << "\" y1=\"" << Y << "\" x2=\"" << kLeft + pw
        << "\" y2=\"" << Y << "\" stroke=\"#e0e0e0\"/>\n";
    out << "<text x=\"" << kLeft - 6 << "\" y=\"" << Y + 4
        << "\" text-anchor=\"end\">" << num(y) << "</text>\n";
  }
  out << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 10
      << "\" text-anchor=\"middle\">" << x_label << "</text>\n";
  out << "</g>\n";
  out << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw
      << "\" height=\"" << ph << "\" fill=\"none\" stroke=\"#333\"/>\n";

  // Curves, decimated to a sane point budget.
  for (const PlotSeries& s : series) {
    const std::size_t n = std::min(s.t.size(), s.y.size());
    if (n == 0) continue;
    const std::size_t stride = std::max<std::size_t>(1, n / kMaxPoints);
    out << "<polyline fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.6\" points=\"";
    for (std::size_t i = 0; i < n; i += stride) {
      out << px(s.t[i]) << ',' << py(s.y[i]) << ' ';
    }
    if ((n - 1) % stride != 0) {
      out << px(s.t[n - 1]) << ',' << py(s.y[n - 1]) << ' ';
    }
    out << "\"/>\n";
  }

  // Legend, top-right corner of the plot area.
  double ly = kTop + 14.0;
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (const PlotSeries& s : series) {
    const double lx = kLeft + pw - 90.0;
    out << "<line x1=\"" << lx << "\" y1=\"" << ly - 4 << "\" x2=\"" << lx + 24
        << "\" y2=\"" << ly - 4 << "\" stroke=\"" << s.color
        << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << lx + 30 << "\" y=\"" << ly << "\">" << s.label
        << "</text>\n";
    ly += 18.0;
  }
  out << "</g>\n</svg>\n";
}

}  // namespace evogain
