#pragma once

#include <string>

#include "hsg/grid.hpp"

namespace hsg::doc {

// Plain-text table of a grid: rows and columns are two chosen axes, cells
// show the token ids at each coordinate pair. Multiple defined tokens in one
// cell are joined with "!" (the collision marker); undefined ones with ",".
std::string render_grid_table(const grid::Grid &g, const std::string &rows,
                              const std::string &cols);

} // namespace hsg::doc
