// SPDX-License-Identifier: Apache-2.0
#pragma once

/// Minimal SVG line plots for singular traces and convergence studies.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "minsurf/csv.hpp"

namespace minsurf {

struct SvgSeries {
  std::vector<double> x, y;
};

/// One polyline per series, linear axes, data rescaled into the frame.
/// log_y plots log10 of |y| (for convergence studies).
inline void write_svg_plot(const std::string& path, const std::string& title,
                           const std::vector<SvgSeries>& series, bool log_x = false,
                           bool log_y = false) {
  const int w = 640, h = 400, margin = 50;
  const auto tx = [&](double v) { return log_x ? std::log10(std::max(v, 1e-300)) : v; };
  const auto ty = [&](double v) { return log_y ? std::log10(std::max(std::abs(v), 1e-300)) : v; };

  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const SvgSeries& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, tx(s.x[i]));
      xmax = std::max(xmax, tx(s.x[i]));
      ymin = std::min(ymin, ty(s.y[i]));
      ymax = std::max(ymax, ty(s.y[i]));
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;

  const auto px = [&](double v) {
    return margin + (tx(v) - xmin) / (xmax - xmin) * (w - 2 * margin);
  };
  const auto py = [&](double v) {
    return h - margin - (ty(v) - ymin) / (ymax - ymin) * (h - 2 * margin);
  };

  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open SVG output file: " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\""
      << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
      << title << "</text>\n";
  out << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << w - 2 * margin
      << "\" height=\"" << h - 2 * margin << "\" fill=\"none\" stroke=\"black\"/>\n";

  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  for (std::size_t k = 0; k < series.size(); ++k) {
    out << "<polyline fill=\"none\" stroke=\"" << colors[k % 4]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < series[k].x.size(); ++i) {
      if (i) out << ' ';
      out << format_double(px(series[k].x[i])) << ',' << format_double(py(series[k].y[i]));
    }
    out << "\"/>\n";
  }
  out << "<text x=\"" << margin << "\" y=\"" << h - 12 << "\" font-size=\"11\">"
      << format_double(log_x ? std::pow(10, xmin) : xmin) << " .. "
      << format_double(log_x ? std::pow(10, xmax) : xmax) << (log_x ? " (log)" : "")
      << "</text>\n";
  out << "</svg>\n";
}

}  // namespace minsurf
