#include "cuspidal/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cuspidal/cuspidal.hpp"
#include "cuspidal/dilation.hpp"
#include "cuspidal/enumerate.hpp"
#include "cuspidal/tiling.hpp"

namespace cusp {

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

// Shifted copies covering every residue alignment of an anchored shape.
std::vector<Shape> residue_shifts(const Shape& anchored, int e) {
  std::vector<Shape> out;
  for (int j = 0; j < e; ++j) out.push_back(anchored.translated(Node{0, j}));
  return out;
}

}  // namespace

OracleReport oracle_gamma_uniqueness(const ConvexPreorder& pre, int rows,
                                     int cols, int max_nodes) {
  OracleReport rep;
  rep.name = "gamma-uniqueness";
  for (const Shape& s : skew_shapes_in_window(rows, cols, max_nodes)) {
    ++rep.cases;
    GammaTiling a = gamma_tiling(s, pre, TieBreak::LexLeastSW);
    GammaTiling b = gamma_tiling(s, pre, TieBreak::LexGreatestSW);
    std::vector<Shape> ta = a.tiles, tb = b.tiles;
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    bool ok = ta == tb && a.partition == b.partition &&
              is_tableau(s, a.tiles) && is_tableau(s, b.tiles);
    if (!ok) {
      rep.passed = false;
      rep.detail = "tie-break changes the canonical tiling of " + to_string(s);
      return rep;
    }
  }
  std::ostringstream os;
  os << rep.cases << " shapes tiled identically under both tie-breaks";
  rep.detail = os.str();
  return rep;
}

namespace {

// True when every tile of `tiles` is a disjoint union of canonical tiles
// that all carry the same content.
bool union_of_equal_gamma_tiles(const std::vector<Shape>& tiles,
                                const GammaTiling& g) {
  std::map<Node, std::size_t> owner;
  for (std::size_t i = 0; i < g.tiles.size(); ++i)
    for (Node u : g.tiles[i].nodes()) owner[u] = i;
  for (const Shape& tile : tiles) {
    std::set<std::size_t> touched;
    for (Node u : tile.nodes()) touched.insert(owner.at(u));
    std::size_t covered = 0;
    const RootVector* common = nullptr;
    for (std::size_t i : touched) {
      for (Node u : g.tiles[i].nodes())
        if (!tile.contains(u)) return false;  // straddles a canonical tile
      covered += g.tiles[i].size();
      if (!common) common = &g.contents[i];
      else if (*common != g.contents[i]) return false;
    }
    if (covered != tile.size()) return false;
  }
  return true;
}

}  // namespace

OracleReport oracle_bilex_maximality(const ConvexPreorder& pre, int rows,
                                     int cols, int max_nodes) {
  OracleReport rep;
  rep.name = "bilex-maximality";
  for (const Shape& s : skew_shapes_in_window(rows, cols, max_nodes)) {
    GammaTiling g = gamma_tiling(s, pre);
    for (const KostantTiling& t :
         enumerate_kostant_tilings(s, pre, max_nodes)) {
      ++rep.cases;
      BilexVerdict v = bilex_compare(g.partition, t.partition, pre);
      bool dominated = v.overall == BilexResult::Equal ||
                       v.overall == BilexResult::GreaterBoth;
      bool equal = v.overall == BilexResult::Equal;
      bool merged = union_of_equal_gamma_tiles(t.tiles, g);
      if (!dominated || equal != merged) {
        rep.passed = false;
        rep.detail = "host " + to_string(s) + ": canonical " +
                     g.partition.to_string(pre) + " vs " +
                     t.partition.to_string(pre) +
                     " (dominated=" + flag(dominated) +
                     ", equal=" + flag(equal) + ", merged=" + flag(merged) +
                     ")";
        return rep;
      }
    }
  }
  std::ostringstream os;
  os << rep.cases << " tilings dominated bilexicographically";
  rep.detail = os.str();
  return rep;
}

OracleReport oracle_cuspidal_classification(const ConvexPreorder& pre,
                                            int max_nodes) {
  OracleReport rep;
  rep.name = "cuspidal-classification";
  std::set<Shape> canon;
  for (const CuspidalRibbon& r : cuspidal_representatives(pre, max_nodes))
    canon.insert(normalize(r.shape, pre.e()));
  for (const Shape& anchored : connected_skew_shapes(max_nodes))
    for (const Shape& s : residue_shifts(anchored, pre.e())) {
      ++rep.cases;
      bool brute = is_cuspidal(s, pre, CuspMethod::Brute);
      bool fast = is_cuspidal(s, pre, CuspMethod::Auto);
      bool listed = canon.count(normalize(s, pre.e())) > 0;
      if (brute != fast || brute != listed) {
        rep.passed = false;
        rep.detail = to_string(s) + ": brute=" + flag(brute) +
                     " fast=" + flag(fast) + " listed=" + flag(listed);
        return rep;
      }
    }
  std::ostringstream os;
  os << rep.cases << " connected shapes classified consistently";
  rep.detail = os.str();
  return rep;
}

OracleReport oracle_semicuspidal_agreement(const ConvexPreorder& pre,
                                           int max_nodes) {
  OracleReport rep;
  rep.name = "semicuspidal-agreement";
  for (const Shape& anchored : connected_skew_shapes(max_nodes))
    for (const Shape& s : residue_shifts(anchored, pre.e())) {
      ++rep.cases;
      bool brute = is_semicuspidal(s, pre, CuspMethod::Brute);
      bool fast = is_semicuspidal(s, pre, CuspMethod::Auto);
      if (brute != fast) {
        rep.passed = false;
        rep.detail = to_string(s) + ": brute=" + flag(brute) +
                     " fast=" + flag(fast);
        return rep;
      }
    }
  std::ostringstream os;
  os << rep.cases << " connected shapes agreed on semicuspidality";
  rep.detail = os.str();
  return rep;
}

OracleReport oracle_dilation_recognition(const ConvexPreorder& pre,
                                         int max_nodes) {
  OracleReport rep;
  rep.name = "dilation-recognition";
  for (const Shape& anchored : connected_skew_shapes(max_nodes))
    for (const Shape& s : residue_shifts(anchored, pre.e())) {
      RootClass rc = classify(content(s, pre.e()));
      if (rc.kind != RootKind::ImaginaryRoot) continue;
      ++rep.cases;
      bool semi = is_semicuspidal(s, pre, CuspMethod::Brute);
      auto un = undilate(s, pre);
      if (semi != un.has_value()) {
        rep.passed = false;
        rep.detail = to_string(s) + ": semicuspidal=" + flag(semi) +
                     " undilates=" + flag(un.has_value());
        return rep;
      }
    }
  std::ostringstream os;
  os << rep.cases << " imaginary-content shapes recognized consistently";
  rep.detail = os.str();
  return rep;
}

}  // namespace cusp
