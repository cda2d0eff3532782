#include "cuspidal/shape.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cusp {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

int residue(Node u, int e) {
  require(e >= 2, "residue: e must be at least 2");
  int r = (u.col - u.row) % e;
  return r < 0 ? r + e : r;
}

// ---------------------------------------------------------------------------
// Shape

Shape::Shape(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
}

bool Shape::contains(Node u) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), u);
}

Shape Shape::translated(Node d) const {
  std::vector<Node> out;
  out.reserve(nodes_.size());
  for (Node u : nodes_) out.push_back(translate(u, d));
  return Shape(std::move(out));
}

Shape Shape::minus(const Shape& o) const {
  std::vector<Node> out;
  std::set_difference(nodes_.begin(), nodes_.end(), o.nodes_.begin(),
                      o.nodes_.end(), std::back_inserter(out));
  return Shape(std::move(out));
}

Shape Shape::unite(const Shape& o) const {
  std::vector<Node> out;
  std::set_union(nodes_.begin(), nodes_.end(), o.nodes_.begin(),
                 o.nodes_.end(), std::back_inserter(out));
  return Shape(std::move(out));
}

bool Shape::disjoint_from(const Shape& o) const {
  const Shape& small = size() <= o.size() ? *this : o;
  const Shape& large = size() <= o.size() ? o : *this;
  for (Node u : small.nodes())
    if (large.contains(u)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Classification

namespace {

struct RowProfile {
  int lo = 0, hi = 0;
  int count = 0;
};

// Per-row column ranges, keyed by row, in increasing row order.
std::map<int, RowProfile> row_profiles(const Shape& s) {
  std::map<int, RowProfile> rows;
  for (Node u : s.nodes()) {
    auto [it, fresh] = rows.try_emplace(u.row, RowProfile{u.col, u.col, 1});
    if (!fresh) {
      it->second.lo = std::min(it->second.lo, u.col);
      it->second.hi = std::max(it->second.hi, u.col);
      ++it->second.count;
    }
  }
  return rows;
}

bool skew_from_rows(const std::map<int, RowProfile>& rows) {
  for (const auto& [r, p] : rows)
    if (p.count != p.hi - p.lo + 1) return false;  // row not contiguous
  // For nonempty rows r < r2 with lo_r <= hi_r2, betweenness fills the whole
  // box [r, r2] x [lo_r, hi_r2]: every row in between must cover it.
  for (auto it = rows.begin(); it != rows.end(); ++it) {
    for (auto jt = std::next(it); jt != rows.end(); ++jt) {
      if (it->second.lo > jt->second.hi) continue;
      for (int q = it->first; q <= jt->first; ++q) {
        auto qt = rows.find(q);
        if (qt == rows.end() || qt->second.lo > it->second.lo ||
            qt->second.hi < jt->second.hi)
          return false;
      }
    }
  }
  return true;
}

std::vector<Shape> raw_components(const Shape& s) {
  std::vector<Shape> out;
  std::set<Node> left(s.nodes().begin(), s.nodes().end());
  while (!left.empty()) {
    std::vector<Node> comp;
    std::queue<Node> frontier;
    frontier.push(*left.begin());
    left.erase(left.begin());
    while (!frontier.empty()) {
      Node u = frontier.front();
      frontier.pop();
      comp.push_back(u);
      for (Node v : {north(u), east(u), south(u), west(u)}) {
        auto it = left.find(v);
        if (it != left.end()) {
          left.erase(it);
          frontier.push(v);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  // Southwest-most component first.  Components of a skew shape occupy
  // disjoint row ranges, so ordering by southernmost row is strict.
  std::sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) {
    int ra = a.nodes().back().row, rb = b.nodes().back().row;
    if (ra != rb) return ra > rb;
    return a.nodes() < b.nodes();
  });
  return out;
}

}  // namespace

ShapeClass validate(const Shape& s) {
  ShapeClass c;
  if (s.empty()) {
    c.skew = c.thin = c.cornered = c.diagonal_convex = c.young = true;
    c.connected = c.ribbon = false;
    return c;
  }

  auto rows = row_profiles(s);
  c.skew = skew_from_rows(rows);

  // Diagonal structure: thin when every diagonal holds at most one node,
  // diagonal-convex when each diagonal's rows are consecutive.
  std::map<int, std::vector<int>> diag_rows;
  for (Node u : s.nodes()) diag_rows[diagonal(u)].push_back(u.row);
  c.thin = true;
  c.diagonal_convex = true;
  for (auto& [d, rs] : diag_rows) {
    if (rs.size() > 1) c.thin = false;
    std::sort(rs.begin(), rs.end());
    for (std::size_t i = 1; i < rs.size(); ++i)
      if (rs[i] != rs[i - 1] + 1) c.diagonal_convex = false;
  }

  c.connected = raw_components(s).size() == 1;

  int sw_corners = 0, ne_corners = 0;
  for (Node u : s.nodes()) {
    if (!s.contains(south(u)) && !s.contains(west(u))) ++sw_corners;
    if (!s.contains(north(u)) && !s.contains(east(u))) ++ne_corners;
  }
  c.cornered = sw_corners <= 1 && ne_corners <= 1;

  c.ribbon = c.thin && c.connected && c.skew;
  c.young = c.skew && s.contains(Node{rows.begin()->first,
                                      std::min_element(
                                          rows.begin(), rows.end(),
                                          [](const auto& a, const auto& b) {
                                            return a.second.lo < b.second.lo;
                                          })
                                          ->second.lo});
  return c;
}

bool is_skew(const Shape& s) {
  return s.empty() || skew_from_rows(row_profiles(s));
}

RootVector content(const Shape& s, int e) {
  std::vector<Int> c(e, 0);
  for (Node u : s.nodes()) ++c[residue(u, e)];
  return RootVector(e, std::move(c));
}

std::vector<Shape> components(const Shape& s) {
  require(is_skew(s), "components: input is not a skew shape");
  return raw_components(s);
}

std::pair<Node, Node> extremes(const Shape& s) {
  require(!s.empty(), "extremes: empty shape");
  int min_row = s.nodes().front().row, max_row = s.nodes().back().row;
  int min_col = s.nodes().front().col, max_col = s.nodes().front().col;
  for (Node u : s.nodes()) {
    min_col = std::min(min_col, u.col);
    max_col = std::max(max_col, u.col);
  }
  Node sw{max_row, min_col}, ne{min_row, max_col};
  require(s.contains(sw) && s.contains(ne),
          "extremes: shape has no extreme corner nodes");
  return {sw, ne};
}

Shape from_skew_partition(const std::vector<Int>& lambda,
                          const std::vector<Int>& mu, int charge) {
  require(mu.size() <= lambda.size(),
          "from_skew_partition: mu has more parts than lambda");
  auto part = [](const std::vector<Int>& p, std::size_t i) {
    return i < p.size() ? p[i] : 0;
  };
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    require(lambda[i] >= 0 && part(mu, i) >= 0,
            "from_skew_partition: negative part");
    if (i + 1 < lambda.size())
      require(lambda[i] >= lambda[i + 1],
              "from_skew_partition: lambda is not weakly decreasing");
    if (i + 1 < mu.size())
      require(mu[i] >= mu[i + 1],
              "from_skew_partition: mu is not weakly decreasing");
    require(part(mu, i) <= lambda[i],
            "from_skew_partition: mu is not contained in lambda");
  }
  std::vector<Node> nodes;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    int r = static_cast<int>(i) + 1;
    for (Int c = part(mu, i) + 1; c <= lambda[i]; ++c)
      nodes.push_back(Node{r, static_cast<int>(c) + charge});
  }
  return Shape(std::move(nodes));
}

Shape stack_components(const std::vector<Shape>& southwest_first, int e) {
  Shape out;
  std::optional<Node> prev_ne;
  for (const Shape& comp : southwest_first) {
    require(!comp.empty(), "stack_components: empty component");
    auto [sw, ne] = extremes(comp);
    Node target;
    if (!prev_ne) {
      target = Node{0, residue(sw, e)};
    } else {
      Node spot{prev_ne->row - 1, prev_ne->col + 1};
      int j = ((residue(sw, e) - residue(spot, e)) % e + e) % e;
      target = Node{spot.row, spot.col + j};
    }
    Node d{target.row - sw.row, target.col - sw.col};
    Shape placed = comp.translated(d);
    out = out.unite(placed);
    prev_ne = translate(ne, d);
  }
  return out;
}

Shape normalize(const Shape& s, int e) {
  if (s.empty()) return s;
  return stack_components(components(s), e);
}

bool e_similar(const Shape& a, const Shape& b, int e) {
  return normalize(a, e) == normalize(b, e);
}

Shape reverse(const Shape& s) {
  std::vector<Node> out;
  out.reserve(s.size());
  for (Node u : s.nodes()) out.push_back(Node{-u.col, -u.row});
  return Shape(std::move(out));
}

std::optional<std::string> ribbon_path(const Shape& s) {
  if (!validate(s).ribbon) return std::nullopt;
  std::string path;
  Node cur = extremes(s).first;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.contains(north(cur))) {
      path += 'N';
      cur = north(cur);
    } else {
      path += 'E';
      cur = east(cur);
    }
  }
  return path;
}

std::string to_string(const Shape& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Node u : s.nodes()) {
    if (!first) os << ',';
    first = false;
    os << '(' << u.row << ',' << u.col << ')';
  }
  os << '}';
  return os.str();
}

}  // namespace cusp
