#include "cuspidal/cuspidal.hpp"

#include <algorithm>
#include <stdexcept>

namespace cusp {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

std::vector<int> init_residues(const RootVector& beta) {
  RootClass rc = classify(beta);
  if (rc.kind == RootKind::RealRoot)
    return {positive_root_form(beta)->t};
  if (rc.kind == RootKind::ImaginaryRoot && rc.delta_multiple == 1) {
    std::vector<int> all(beta.e());
    for (int t = 0; t < beta.e(); ++t) all[t] = t;
    return all;
  }
  throw std::invalid_argument("init_residues: " + root_name(beta) +
                              " is not an indivisible positive root");
}

CuspidalRibbon cuspidal_ribbon(const RootVector& beta, Node b,
                               const ConvexPreorder& pre) {
  require(beta.e() == pre.e(), "cuspidal_ribbon: e mismatch");
  const int e = pre.e();
  auto admissible = init_residues(beta);
  require(std::find(admissible.begin(), admissible.end(), residue(b, e)) !=
              admissible.end(),
          "cuspidal_ribbon: base residue " +
              std::to_string(residue(b, e)) + " cannot start a ribbon of "
              "content " + root_name(beta));

  std::vector<Node> nodes{b};
  Node cur = b;
  const int t = residue(b, e);
  for (Int i = 1; i < beta.height(); ++i) {
    Cmp c = pre.compare(alpha(e, t, i), beta);
    if (c == Cmp::Equivalent)
      throw std::logic_error(
          "cuspidal_ribbon: prefix content equivalent to target; the "
          "preorder is not convex");
    cur = c == Cmp::Greater ? north(cur) : east(cur);
    nodes.push_back(cur);
  }
  return CuspidalRibbon{Shape(std::move(nodes)), beta, b};
}

namespace {

bool brute_splits(const Shape& s, const RootVector& pivot, Strictness strict,
                  const ConvexPreorder& pre) {
  Decomposer below(pre, pivot, Direction::Below, strict);
  Decomposer above(pre, pivot, Direction::Above, strict);
  for (const auto& [lower, upper] : enumerate_two_splits(s, 25)) {
    if (!below.decomposes(content(lower, pre.e())) ||
        !above.decomposes(content(upper, pre.e())))
      return false;
  }
  return true;
}

}  // namespace

bool is_cuspidal(const Shape& s, const ConvexPreorder& pre,
                 CuspMethod method) {
  require(is_skew(s), "is_cuspidal: input is not a skew shape");
  if (s.empty()) return false;
  RootVector beta = content(s, pre.e());
  if (!is_positive_root(beta)) return false;

  if (method == CuspMethod::Auto) {
    // Cuspidal shapes are ribbons, and a ribbon is cuspidal iff every
    // proper removable ribbon sits strictly above it.  The classification
    // oracle checks this agrees with the exhaustive definition.
    if (!validate(s).ribbon) return false;
    for (const auto& r : removable_ribbons(s)) {
      if (r.ribbon.size() == s.size()) continue;
      if (pre.compare(content(r.ribbon, pre.e()), beta) != Cmp::Greater)
        return false;
    }
    return true;
  }
  return brute_splits(s, beta, Strictness::Strict, pre);
}

bool is_semicuspidal(const Shape& s, const ConvexPreorder& pre,
                     CuspMethod method) {
  require(is_skew(s), "is_semicuspidal: input is not a skew shape");
  if (s.empty()) return false;
  auto pm = psi_m(content(s, pre.e()));
  if (!pm) return false;

  if (method == CuspMethod::Brute)
    return brute_splits(s, pm->base, Strictness::Weak, pre);

  for (const RootVector& c : gamma_tiling(s, pre).contents)
    if (c != pm->base) return false;
  return true;
}

GammaTiling gamma_tiling(const Shape& host, const ConvexPreorder& pre,
                         TieBreak tb) {
  require(!host.empty() && is_skew(host),
          "gamma_tiling: host must be a nonempty skew shape");
  std::vector<Shape> removed;
  Shape cur = host;
  while (!cur.empty()) {
    Shape ribbon = minimal_se_removable(cur, pre, tb);
    removed.push_back(ribbon);
    cur = cur.minus(ribbon);
  }
  GammaTiling g;
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    g.tiles.push_back(*it);
    g.contents.push_back(content(*it, pre.e()));
  }
  g.partition = kostant_from_sequence(g.contents, pre);
  return g;
}

GammaTiling gamma_sc_tiling(const Shape& host, const ConvexPreorder& pre) {
  GammaTiling fine = gamma_tiling(host, pre);
  GammaTiling coarse;
  std::size_t i = 0;
  while (i < fine.tiles.size()) {
    std::size_t j = i;
    Shape tile = fine.tiles[i];
    while (j + 1 < fine.tiles.size() &&
           fine.contents[j + 1] == fine.contents[i]) {
      ++j;
      tile = tile.unite(fine.tiles[j]);
    }
    coarse.tiles.push_back(tile);
    coarse.contents.push_back(content(tile, pre.e()));
    i = j + 1;
  }
  coarse.partition = kostant_from_sequence(coarse.contents, pre);
  return coarse;
}

std::vector<CuspidalRibbon> cuspidal_representatives(const ConvexPreorder& pre,
                                                     Int height_bound) {
  const int e = pre.e();
  std::vector<CuspidalRibbon> out;
  for (Int h = 1; h <= height_bound; ++h) {
    if (h % e == 0) continue;
    std::vector<RootVector> level;
    for (int t = 0; t < e; ++t) level.push_back(alpha(e, t, h));
    std::sort(level.begin(), level.end(),
              [&](const RootVector& a, const RootVector& b) {
                return pre.compare(a, b) == Cmp::Greater;
              });
    for (const RootVector& beta : level) {
      int t = positive_root_form(beta)->t;
      out.push_back(cuspidal_ribbon(beta, Node{0, t}, pre));
    }
  }
  if (height_bound >= e)
    for (int t = 0; t < e; ++t)
      out.push_back(cuspidal_ribbon(RootVector::delta(e), Node{0, t}, pre));
  return out;
}

}  // namespace cusp
