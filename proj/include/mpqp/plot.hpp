#pragma once

#include <cstddef>
#include <string>

#include "mpqp/solution.hpp"

namespace mpqp {

struct PlotOptions {
  int grid = 100;
};

struct PlotSummary {
  std::size_t colored_cells = 0;
  std::size_t background_cells = 0;
  std::size_t legend_rows = 0;
};

/// Fill color of record k, as "#rrggbb".
std::string region_color(std::size_t k);

/// Cells not owned by any record.
inline constexpr const char* kBackgroundColor = "#ffffff";

/// Samples a grid x grid lattice of cell centers over the bounding box of
/// Theta0, colors each cell by its owning record (as in `locate`) and writes
/// an SVG to `svg_path` plus a legend to `svg_path + ".legend.txt"` with one
/// "index color active_set cells" row per record.
///
/// Throws WrongDimension unless p = 2, Unbounded for an unbounded Theta0.
PlotSummary plot2d(const ExplicitSolution& sol, const std::string& svg_path,
                   const PlotOptions& options = {});

}  // namespace mpqp
