#include "cuspidal/render.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cuspidal/roots.hpp"

namespace cusp {

namespace {

const std::vector<std::string>& default_palette() {
  static const std::vector<std::string> p = {
      "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
      "#edc949", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
  return p;
}

std::string ansi(int idx, const std::string& text) {
  return "\033[" + std::to_string(31 + idx % 7) + "m" + text + "\033[0m";
}

char tile_letter(std::size_t i) {
  if (i < 26) return static_cast<char>('A' + i);
  if (i < 52) return static_cast<char>('a' + (i - 26));
  return '#';
}

struct Box {
  int min_row = 0, max_row = -1, min_col = 0, max_col = -1;
};

Box bounding_box(const Shape& s) {
  Box b;
  if (s.empty()) return b;
  b.min_row = b.max_row = s.nodes().front().row;
  b.min_col = b.max_col = s.nodes().front().col;
  for (Node u : s.nodes()) {
    b.min_row = std::min(b.min_row, u.row);
    b.max_row = std::max(b.max_row, u.row);
    b.min_col = std::min(b.min_col, u.col);
    b.max_col = std::max(b.max_col, u.col);
  }
  return b;
}

// Cell text for every node keyed by position; all entries must have equal
// width.  `fill` paints ANSI color when enabled.
std::string ascii_grid(const std::map<Node, std::string>& cells,
                       const std::map<Node, int>& color_idx, const Box& b,
                       int width, bool color) {
  std::ostringstream os;
  const std::string hole(width, '.');
  for (int r = b.min_row; r <= b.max_row; ++r) {
    for (int c = b.min_col; c <= b.max_col; ++c) {
      if (c > b.min_col) os << ' ';
      auto it = cells.find(Node{r, c});
      if (it == cells.end()) {
        os << hole;
      } else if (color) {
        os << ansi(color_idx.at(Node{r, c}), it->second);
      } else {
        os << it->second;
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string svg_grid(const std::map<Node, std::string>& cells,
                     const std::map<Node, int>& color_idx, const Box& b,
                     const RenderOptions& opts) {
  const auto& palette =
      opts.palette.empty() ? default_palette() : opts.palette;
  const int cs = opts.cell_size;
  const int w = (b.max_col - b.min_col + 1) * cs;
  const int h = (b.max_row - b.min_row + 1) * cs;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << std::max(w, 1) << ' '
     << std::max(h, 1) << "\">\n";
  for (const auto& [u, text] : cells) {
    const int x = (u.col - b.min_col) * cs;
    const int y = (u.row - b.min_row) * cs;
    os << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cs
       << "\" height=\"" << cs << "\" fill=\""
       << palette[color_idx.at(u) % palette.size()]
       << "\" stroke=\"#333333\"/>\n";
    if (opts.show_residues)
      os << "  <text x=\"" << x + cs / 2 << "\" y=\"" << y + cs / 2
         << "\" text-anchor=\"middle\" dominant-baseline=\"central\""
         << " font-family=\"monospace\" font-size=\"" << cs / 2 << "\">"
         << text << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

std::string render_shape(const Shape& s, int e, const RenderOptions& opts) {
  std::map<Node, std::string> cells;
  std::map<Node, int> color_idx;
  for (Node u : s.nodes()) {
    int res = residue(u, e);
    cells[u] = opts.show_residues ? std::to_string(res) : std::string("#");
    color_idx[u] = res;
  }
  Box b = bounding_box(s);
  if (opts.format == RenderOptions::Format::Svg)
    return svg_grid(cells, color_idx, b, opts);
  return ascii_grid(cells, color_idx, b, 1, opts.color);
}

std::string render_tiling(const GammaTiling& g, int e,
                          const RenderOptions& opts) {
  std::map<Node, std::string> cells;
  std::map<Node, int> color_idx;
  Shape host;
  for (std::size_t i = 0; i < g.tiles.size(); ++i) {
    host = host.unite(g.tiles[i]);
    for (Node u : g.tiles[i].nodes()) {
      std::string text(1, tile_letter(i));
      if (opts.show_residues &&
          opts.format == RenderOptions::Format::Ascii)
        text += std::to_string(residue(u, e));
      if (opts.format == RenderOptions::Format::Svg && opts.show_residues)
        text = std::to_string(residue(u, e));
      cells[u] = text;
      color_idx[u] = static_cast<int>(i);
    }
  }
  Box b = bounding_box(host);
  std::string grid;
  if (opts.format == RenderOptions::Format::Svg) {
    grid = svg_grid(cells, color_idx, b, opts);
  } else {
    grid = ascii_grid(cells, color_idx, b, opts.show_residues ? 2 : 1,
                      opts.color);
    for (std::size_t i = 0; i < g.tiles.size(); ++i)
      grid += std::string(1, tile_letter(i)) + ": " +
              root_name(g.contents[i]) + "\n";
  }
  return grid;
}

}  // namespace cusp
