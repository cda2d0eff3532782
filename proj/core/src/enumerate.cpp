#include "cuspidal/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <utility>

namespace cusp {

// Each row of a skew shape is a contiguous column interval, and whenever two
// nonempty rows r < r2 satisfy lo_r <= hi_r2, betweenness closure forces
// every row in between to exist and cover the box [lo_r, hi_r2].  Rows whose
// intervals sit strictly southwest of each other interact in no way, so
// empty rows between them are legal.  The search assigns each window row an
// interval or leaves it empty, checking the box condition pairwise as rows
// are added; every skew shape in the window is emitted exactly once, when
// its southernmost row is placed.
std::vector<Shape> skew_shapes_in_window(int rows, int cols, int max_nodes) {
  std::vector<Shape> out;
  if (rows < 1 || cols < 1 || max_nodes < 1) return out;

  std::vector<std::optional<std::pair<int, int>>> ivs(rows);
  int count = 0;

  auto box_ok = [&](int r2, int lo2, int hi2) {
    for (int i = 0; i < r2; ++i) {
      if (!ivs[i] || ivs[i]->first > hi2) continue;
      if (lo2 > ivs[i]->first) return false;
      for (int j = i; j < r2; ++j)
        if (!ivs[j] || ivs[j]->first > ivs[i]->first ||
            ivs[j]->second < hi2)
          return false;
    }
    return true;
  };

  auto emit = [&](int last) {
    std::vector<Node> nodes;
    nodes.reserve(count);
    for (int r = 0; r <= last; ++r) {
      if (!ivs[r]) continue;
      for (int c = ivs[r]->first; c <= ivs[r]->second; ++c)
        nodes.push_back(Node{r, c});
    }
    out.push_back(Shape(std::move(nodes)));
  };

  std::function<void(int)> grow = [&](int r) {
    if (r == rows) return;
    grow(r + 1);  // row r stays empty
    for (int lo = 0; lo < cols; ++lo)
      for (int hi = lo; hi < cols && count + hi - lo + 1 <= max_nodes; ++hi) {
        if (!box_ok(r, lo, hi)) continue;
        ivs[r] = {lo, hi};
        count += hi - lo + 1;
        emit(r);
        grow(r + 1);
        ivs[r] = std::nullopt;
        count -= hi - lo + 1;
      }
  };
  grow(0);
  return out;
}

std::vector<Shape> connected_skew_shapes(int max_nodes) {
  std::vector<Shape> out;
  if (max_nodes < 1) return out;

  auto anchored = [](const Shape& s) {
    int min_row = s.nodes().front().row, min_col = s.nodes().front().col;
    for (Node u : s.nodes()) {
      min_row = std::min(min_row, u.row);
      min_col = std::min(min_col, u.col);
    }
    return s.translated(Node{-min_row, -min_col});
  };

  // Every connected set of n+1 cells contains a connected set of n cells, so
  // growing each layer by one adjacent cell reaches every translation class.
  std::set<Shape> layer{Shape({Node{0, 0}})};
  for (int n = 1; n <= max_nodes && !layer.empty(); ++n) {
    for (const Shape& s : layer)
      if (is_skew(s)) out.push_back(s);
    if (n == max_nodes) break;
    std::set<Shape> next;
    for (const Shape& s : layer)
      for (Node u : s.nodes())
        for (Node v : {north(u), south(u), east(u), west(u)}) {
          if (s.contains(v)) continue;
          std::vector<Node> nodes = s.nodes();
          nodes.push_back(v);
          next.insert(anchored(Shape(std::move(nodes))));
        }
    layer = std::move(next);
  }
  return out;
}

}  // namespace cusp
