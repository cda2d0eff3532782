#pragma once

// Plain-text and SVG pictures of shapes and tilings.  ASCII output prints
// one grid row per line, north first: each cell is the node's residue digit
// (or the tile's letter for tilings) and absent cells print '.', columns
// separated by single spaces.  SVG output is deterministic: one unit square
// per node in sorted order, residues as centered text.

#include <string>
#include <vector>

#include "cuspidal/cuspidal.hpp"
#include "cuspidal/shape.hpp"

namespace cusp {

struct RenderOptions {
  enum class Format { Ascii, Svg };
  Format format = Format::Ascii;
  int cell_size = 24;                 // SVG pixels per cell
  std::vector<std::string> palette;   // SVG fills, cycled; default built in
  bool show_residues = true;
  bool color = false;                 // ANSI colors in ASCII output
};

std::string render_shape(const Shape& s, int e,
                         const RenderOptions& opts = {});

// Cells show tile letters 'A'.. in tableau order; a legend line per tile
// ("A: δ+α0") follows the grid.  With show_residues, ASCII cells render as
// letter+residue pairs.
std::string render_tiling(const GammaTiling& g, int e,
                          const RenderOptions& opts = {});

}  // namespace cusp
