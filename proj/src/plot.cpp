#include "mpqp/plot.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <vector>

#include "mpqp/errors.hpp"
#include "mpqp/feasibility.hpp"

namespace mpqp {

std::string region_color(std::size_t k) {
  // Golden-angle hue walk, fixed saturation and value.
  const double h = std::fmod(static_cast<double>(k) * 137.508, 360.0) / 60.0;
  const double s = 0.55;
  const double v = 0.9;
  const double c = v * s;
  const double x = c * (1.0 - std::abs(std::fmod(h, 2.0) - 1.0));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h)) {
    case 0: r = c; g = x; break;
    case 1: r = x; g = c; break;
    case 2: g = c; b = x; break;
    case 3: g = x; b = c; break;
    case 4: r = x; b = c; break;
    default: r = c; b = x; break;
  }
  const double base = v - c;
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                static_cast<int>(std::lround(255 * (r + base))),
                static_cast<int>(std::lround(255 * (g + base))),
                static_cast<int>(std::lround(255 * (b + base))));
  return buf;
}

PlotSummary plot2d(const ExplicitSolution& sol, const std::string& svg_path,
                   const PlotOptions& options) {
  if (sol.p != 2) {
    throw WrongDimension("plot2d needs p = 2, solution has p = " + std::to_string(sol.p));
  }
  if (options.grid < 1) throw ValidationError("grid: must be at least 1");
  const BoundingBox box = bounding_box(sol.theta0, sol.tolerances.eps_feas);

  const int N = options.grid;
  const double cell = 8.0;
  const double size = N * cell;
  const Vector span = box.upper - box.lower;

  std::ofstream out(svg_path);
  if (!out) throw ValidationError("cannot write '" + svg_path + "'");
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size
      << "\" shape-rendering=\"crispEdges\">\n";
  out << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\""
      << kBackgroundColor << "\"/>\n";

  PlotSummary summary;
  std::vector<std::size_t> cells(sol.records.size(), 0);
  Vector theta(2);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      theta(0) = box.lower(0) + span(0) * (i + 0.5) / N;
      theta(1) = box.lower(1) + span(1) * (j + 0.5) / N;
      const auto k = locate(sol, theta);
      if (!k) {
        ++summary.background_cells;
        continue;
      }
      ++summary.colored_cells;
      ++cells[*k];
      // theta_2 grows upward.
      out << "<rect x=\"" << i * cell << "\" y=\"" << (N - 1 - j) * cell
          << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
          << region_color(*k) << "\"/>\n";
    }
  }
  out << "</svg>\n";
  if (!out) throw ValidationError("write to '" + svg_path + "' failed");

  std::ofstream legend(svg_path + ".legend.txt");
  if (!legend) throw ValidationError("cannot write '" + svg_path + ".legend.txt'");
  legend << "# theta1 in [" << box.lower(0) << ", " << box.upper(0) << "], theta2 in ["
         << box.lower(1) << ", " << box.upper(1) << "], background " << kBackgroundColor
         << "\n";
  for (std::size_t k = 0; k < sol.records.size(); ++k) {
    legend << k << ' ' << region_color(k) << ' ' << sol.records[k].active_set.to_string()
           << ' ' << cells[k] << '\n';
    ++summary.legend_rows;
  }
  return summary;
}

}  // namespace mpqp
