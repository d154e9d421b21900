#include "hsg/render.hpp"

#include <algorithm>
#include <vector>

#include "hsg/error.hpp"

namespace hsg::doc {

namespace {

// display width in code points (the labels are ASCII plus a few two- or
// three-byte symbols; counting code points keeps the columns aligned)
std::size_t width(const std::string &s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xc0) != 0x80)
      ++n;
  return n;
}

std::string pad(const std::string &s, std::size_t w) {
  std::string out = s;
  for (std::size_t i = width(s); i < w; ++i)
    out += ' ';
  return out;
}

} // namespace

std::string render_grid_table(const grid::Grid &g, const std::string &rows,
                              const std::string &cols) {
  const grid::Axis *row_axis = g.axis(rows);
  const grid::Axis *col_axis = g.axis(cols);
  if (!row_axis || !col_axis)
    fail(ErrorCode::not_found, "render: axis not in grid");

  const std::size_t nr = row_axis->indices.size();
  const std::size_t nc = col_axis->indices.size();

  // cell content with the collision marker for duplicated defined tokens
  std::vector<std::vector<std::string>> cells(nr,
                                              std::vector<std::string>(nc));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) {
      std::vector<std::string> defined, undefined;
      for (const auto &t : g.tokens) {
        if (grid::value_to_string(g.coords.at({t, rows})) !=
                grid::value_to_string(row_axis->indices[r]) ||
            grid::value_to_string(g.coords.at({t, cols})) !=
                grid::value_to_string(col_axis->indices[c]))
          continue;
        (g.delta.at(t) ? defined : undefined).push_back(t);
      }
      std::string cell;
      const char *sep = defined.size() > 1 ? "!" : ",";
      for (const auto &t : defined)
        cell += (cell.empty() ? "" : sep) + t;
      for (const auto &t : undefined)
        cell += (cell.empty() ? "" : ",") + t;
      cells[r][c] = cell;
    }

  const std::string corner = rows + " \\ " + cols;
  std::vector<std::size_t> widths(nc + 1, width(corner));
  for (std::size_t r = 0; r < nr; ++r)
    widths[0] =
        std::max(widths[0], width(grid::value_to_string(row_axis->indices[r])));
  widths[0] = std::max(widths[0], width(corner));
  for (std::size_t c = 0; c < nc; ++c) {
    widths[c + 1] = width(grid::value_to_string(col_axis->indices[c]));
    for (std::size_t r = 0; r < nr; ++r)
      widths[c + 1] = std::max(widths[c + 1], width(cells[r][c]));
  }

  std::string out;
  out += pad(corner, widths[0]);
  for (std::size_t c = 0; c < nc; ++c)
    out += " | " + pad(grid::value_to_string(col_axis->indices[c]), widths[c + 1]);
  out += "\n";
  std::size_t total = widths[0];
  for (std::size_t c = 0; c < nc; ++c)
    total += 3 + widths[c + 1];
  out += std::string(total, '-') + "\n";
  for (std::size_t r = 0; r < nr; ++r) {
    out += pad(grid::value_to_string(row_axis->indices[r]), widths[0]);
    for (std::size_t c = 0; c < nc; ++c)
      out += " | " + pad(cells[r][c], widths[c + 1]);
    out += "\n";
  }
  return out;
}

} // namespace hsg::doc
