#include "cuspidal/dilation.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cusp {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

int reduce_mod(int v, int e) {
  int r = v % e;
  return r < 0 ? r + e : r;
}

}  // namespace

const DilationFrame& frame(int t, const ConvexPreorder& pre) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, DilationFrame> cache;
  const int tt = reduce_mod(t, pre.e());
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(pre.key(), tt);
  auto it = cache.find(key);
  if (it == cache.end()) {
    DilationFrame f;
    f.t = tt;
    f.base = Node{0, tt};
    Shape rib =
        cuspidal_ribbon(RootVector::delta(pre.e()), f.base, pre).shape;
    Node ne = extremes(rib).second;
    f.x = Node{east(ne).row - f.base.row, east(ne).col - f.base.col};
    f.y = Node{north(ne).row - f.base.row, north(ne).col - f.base.col};
    it = cache.emplace(key, f).first;
  }
  return it->second;
}

Node phi(const DilationFrame& f, Node u) {
  return Node{f.base.row + u.row * f.y.row + u.col * f.x.row,
              f.base.col + u.row * f.y.col + u.col * f.x.col};
}

Shape dilate(int t, const Shape& core, const ConvexPreorder& pre) {
  const DilationFrame& f = frame(t, pre);
  Shape rib =
      cuspidal_ribbon(RootVector::delta(pre.e()), f.base, pre).shape;
  Shape out;
  for (Node u : core.nodes()) {
    // Copy for core node u is based at base + u.col*x - u.row*y: east steps
    // shift by x, north steps by y.
    Node d{u.col * f.x.row - u.row * f.y.row,
           u.col * f.x.col - u.row * f.y.col};
    out = out.unite(rib.translated(d));
  }
  return out;
}

std::optional<std::pair<int, Shape>> undilate(const Shape& s,
                                              const ConvexPreorder& pre) {
  if (s.empty() || !is_skew(s)) return std::nullopt;
  const int e = pre.e();
  RootClass rc = classify(content(s, e));
  if (rc.kind != RootKind::ImaginaryRoot) return std::nullopt;

  GammaTiling g = gamma_tiling(s, pre);
  const RootVector d = RootVector::delta(e);
  int t = -1;
  std::vector<Node> core_nodes;
  for (std::size_t i = 0; i < g.tiles.size(); ++i) {
    if (g.contents[i] != d) return std::nullopt;
    Node sw = extremes(g.tiles[i]).first;
    int tile_t = residue(sw, e);
    if (t == -1) t = tile_t;
    if (tile_t != t) return std::nullopt;
  }

  const DilationFrame& f = frame(t, pre);
  // Solve sw - base == col*x - row*y for each tile; x and y span a
  // determinant-(+-e) lattice, so the solution is unique when integral.
  const long long det = -static_cast<long long>(f.x.row) * f.y.col +
                        static_cast<long long>(f.x.col) * f.y.row;
  for (const Shape& tile : g.tiles) {
    Node sw = extremes(tile).first;
    long long drow = sw.row - f.base.row, dcol = sw.col - f.base.col;
    long long col_num = -drow * f.y.col + f.y.row * dcol;
    long long row_num = f.x.row * dcol - f.x.col * drow;
    if (col_num % det || row_num % det) return std::nullopt;
    core_nodes.push_back(Node{static_cast<int>(row_num / det),
                              static_cast<int>(col_num / det)});
  }
  Shape core(std::move(core_nodes));
  if (core.size() != g.tiles.size()) return std::nullopt;
  if (dilate(t, core, pre) != s) return std::nullopt;
  return std::make_pair(t, core);
}

Shape build_imaginary_semicuspidal(
    const std::vector<std::pair<Shape, int>>& components,
    const ConvexPreorder& pre) {
  require(!components.empty(),
          "build_imaginary_semicuspidal: no components given");
  std::vector<Shape> dilated_sw_first;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& [core, color] = components[i];
    ShapeClass cls = validate(core);
    require(!core.empty(), "build_imaginary_semicuspidal: component " +
                               std::to_string(i + 1) + " is empty");
    require(cls.connected && cls.skew,
            "build_imaginary_semicuspidal: component " +
                std::to_string(i + 1) + " is not a connected skew shape");
    dilated_sw_first.push_back(dilate(color, core, pre));
  }
  // Input lists the northeast-most component first; stacking wants
  // southwest-most first.
  std::reverse(dilated_sw_first.begin(), dilated_sw_first.end());
  return stack_components(dilated_sw_first, pre.e());
}

}  // namespace cusp
