#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuspidal/cuspidal.hpp"
#include "cuspidal/enumerate.hpp"
#include "cuspidal/preorder.hpp"
#include "cuspidal/roots.hpp"
#include "cuspidal/shape.hpp"
#include "support.hpp"

using namespace cusp;
using cusp::testing::bigex;
using cusp::testing::draw;
using cusp::testing::e2std;
using cusp::testing::random_connected_skew;
using cusp::testing::sh;

namespace {

RootVector rv(int e, std::vector<Int> c) { return RootVector(e, std::move(c)); }

struct RibbonGold {
  RootVector root;
  int base_residue;
  std::string path;
};

}  // namespace

TEST_SUITE("cuspidal") {

TEST_CASE("init_residues") {
  CHECK(init_residues(rv(3, {1, 1, 0})) == std::vector<int>{0});
  CHECK(init_residues(rv(3, {1, 0, 1})) == std::vector<int>{2});
  CHECK(init_residues(rv(2, {1, 2})) == std::vector<int>{1});
  CHECK(init_residues(RootVector::delta(3)) == std::vector<int>{0, 1, 2});
  CHECK_THROWS_AS(init_residues(rv(3, {2, 0, 0})), std::invalid_argument);
  CHECK_THROWS_AS(init_residues(RootVector::delta(2).times(2)),
                  std::invalid_argument);
}

TEST_CASE("canonical ribbons follow their documented walks") {
  const std::vector<RibbonGold> bigex_golds = {
      {rv(3, {1, 0, 0}), 0, ""},
      {rv(3, {0, 1, 0}), 1, ""},
      {rv(3, {0, 0, 1}), 2, ""},
      {rv(3, {1, 1, 0}), 0, "N"},
      {rv(3, {0, 1, 1}), 1, "N"},
      {rv(3, {1, 0, 1}), 2, "E"},
      {rv(3, {2, 1, 1}), 0, "NNE"},
      {rv(3, {1, 1, 2}), 2, "ENN"},
      {rv(3, {2, 2, 1}), 0, "NNEN"},
      {rv(3, {1, 2, 2}), 1, "EENN"},
      {rv(3, {3, 2, 2}), 0, "NNENEE"},
      {rv(3, {2, 3, 3}), 1, "EENNENN"},
  };
  for (const auto& g : bigex_golds) {
    CAPTURE(root_name(g.root));
    Node b{0, g.base_residue};
    CuspidalRibbon rib = cuspidal_ribbon(g.root, b, bigex());
    CHECK(rib.base == b);
    CHECK(rib.root == g.root);
    CHECK(content(rib.shape, 3) == g.root);
    CHECK(ribbon_path(rib.shape) == g.path);
    CHECK(extremes(rib.shape).first == b);
    CHECK(is_cuspidal(rib.shape, bigex()));
  }

  // The imaginary family: one ribbon per residue.
  CHECK(ribbon_path(cuspidal_ribbon(RootVector::delta(3), Node{0, 0}, bigex())
                        .shape) == "NN");
  CHECK(ribbon_path(cuspidal_ribbon(RootVector::delta(3), Node{0, 1}, bigex())
                        .shape) == "EE");
  CHECK(ribbon_path(cuspidal_ribbon(RootVector::delta(3), Node{0, 2}, bigex())
                        .shape) == "EN");

  const std::vector<RibbonGold> e2_golds = {
      {rv(2, {1, 2}), 1, "NE"},
      {rv(2, {2, 1}), 0, "EN"},
  };
  for (const auto& g : e2_golds) {
    CuspidalRibbon rib = cuspidal_ribbon(g.root, Node{0, g.base_residue},
                                         e2std());
    CHECK(ribbon_path(rib.shape) == g.path);
    CHECK(content(rib.shape, 2) == g.root);
  }
  CHECK(ribbon_path(cuspidal_ribbon(RootVector::delta(2), Node{0, 0}, e2std())
                        .shape) == "E");
  CHECK(ribbon_path(cuspidal_ribbon(RootVector::delta(2), Node{0, 1}, e2std())
                        .shape) == "N");

  // The walk also starts from translated bases and keeps its step word.
  CuspidalRibbon moved =
      cuspidal_ribbon(rv(3, {2, 1, 1}), Node{4, 1 + 3 * 2}, bigex());
  CHECK(ribbon_path(moved.shape) == "NNE");

  // Inadmissible base residues are rejected.
  CHECK_THROWS_AS(cuspidal_ribbon(rv(3, {1, 1, 0}), Node{0, 1}, bigex()),
                  std::invalid_argument);
}

TEST_CASE("is_cuspidal classifies landmark shapes") {
  CHECK(is_cuspidal(sh({{0, 0}}), bigex()));
  CHECK(is_cuspidal(cuspidal_ribbon(rv(3, {2, 1, 1}), Node{0, 0}, bigex())
                        .shape, bigex()));
  // A horizontal strip of residues 0,1 has its east node removable with
  // content alpha1, which sits below alpha0+alpha1, so it is not cuspidal.
  CHECK(!is_cuspidal(sh({{0, 0}, {0, 1}}), bigex()));
  // Content that is not a positive root is never cuspidal.
  CHECK(!is_cuspidal(sh({{0, 0}, {-1, 1}}), bigex()));
  CHECK(!is_cuspidal(Shape{}, bigex()));
  CHECK_THROWS_AS(is_cuspidal(sh({{0, 0}, {1, 1}}), bigex()),
                  std::invalid_argument);

  // The two classification methods agree on a random sample (the oracle
  // sweeps this exhaustively).
  std::mt19937 rng(7201);
  for (const ConvexPreorder& pre : {bigex(), e2std()}) {
    for (int trial = 0; trial < 40; ++trial) {
      Shape s = random_connected_skew(rng, 1 + static_cast<int>(draw(rng, 7)));
      CHECK(is_cuspidal(s, pre, CuspMethod::Auto) ==
            is_cuspidal(s, pre, CuspMethod::Brute));
    }
  }
}

TEST_CASE("is_semicuspidal on landmark shapes") {
  for (const auto& rep : cuspidal_representatives(bigex(), 5))
    CHECK(is_semicuspidal(rep.shape, bigex()));
  // A column of four nodes with bottom residue 0 peels apart as
  // [alpha1, delta, alpha0], so it is not semicuspidal at e=2.
  Shape column = sh({{0, 1}, {1, 1}, {2, 1}, {3, 1}});
  CHECK(content(column, 2) == RootVector::delta(2).times(2));
  CHECK(!is_semicuspidal(column, e2std()));
  CHECK(!is_semicuspidal(column, e2std(), CuspMethod::Brute));
  // Two antidiagonally stacked copies of the alpha0 ribbon: content
  // 2*alpha0, semicuspidal.
  CHECK(is_semicuspidal(sh({{0, 0}, {-1, 1}}), e2std()));
  // Content 3*alpha0 + alpha1 is no psi-multiple: never semicuspidal.
  Shape ragged = sh({{0, 0}, {-1, 1}, {-2, 2}, {-2, 3}});
  CHECK(!is_semicuspidal(ragged, e2std()));
  CHECK(!is_semicuspidal(ragged, e2std(), CuspMethod::Brute));
  CHECK_THROWS_AS(is_semicuspidal(sh({{0, 0}, {1, 1}}), e2std()),
                  std::invalid_argument);

  std::mt19937 rng(7202);
  for (const ConvexPreorder& pre : {bigex(), e2std()}) {
    for (int trial = 0; trial < 25; ++trial) {
      Shape s = random_connected_skew(rng, 1 + static_cast<int>(draw(rng, 6)));
      CHECK(is_semicuspidal(s, pre, CuspMethod::Auto) ==
            is_semicuspidal(s, pre, CuspMethod::Brute));
    }
  }
}

TEST_CASE("canonical tiling partitions of the three charged diagrams") {
  const std::vector<Int> lam = {6, 5, 5, 5, 5, 2, 2, 1};
  GammaTiling g0 = gamma_tiling(from_skew_partition(lam, {}, 0), bigex());
  CHECK(g0.partition.to_string(bigex()) ==
        "(α0 | 2δ+α0 | 2δ+α0+α1 | δ² | δ+α1+α2 | α1+α2 | α2²)");

  GammaTiling g1 = gamma_tiling(from_skew_partition(lam, {}, 1), bigex());
  CHECK(g1.partition.to_string(bigex()) ==
        "(α0+α1 | α2+α0 | δ+α0+α1 | δ+α2+α0 | 2δ+α0+α1 | δ² | α1+α2 | α2)");

  GammaTiling g2 = gamma_tiling(from_skew_partition(lam, {}, 2), bigex());
  CHECK(g2.partition.to_string(bigex()) ==
        "(δ+α0 | 3δ+α0 | δ³ | δ+α2 | α1³ | α2)");

  GammaTiling ge2 = gamma_tiling(
      from_skew_partition({6, 6, 6, 4, 1}, {5, 1, 1, 0, 0}, 0), e2std());
  CHECK(ge2.partition.to_string(e2std()) == "(α1² | δ+α1 | δ³ | δ+α0 | α0²)");
}

TEST_CASE("canonical tilings are tie-break independent tableaux") {
  std::vector<std::pair<Shape, const ConvexPreorder*>> hosts;
  const ConvexPreorder& b3 = bigex();
  const ConvexPreorder& b2 = e2std();
  hosts.push_back({from_skew_partition({6, 5, 5, 5, 5, 2, 2, 1}, {}, 0), &b3});
  hosts.push_back({from_skew_partition({6, 6, 6, 4, 1}, {5, 1, 1, 0, 0}, 0),
                   &b2});
  std::mt19937 rng(7203);
  for (int trial = 0; trial < 20; ++trial)
    hosts.push_back({random_connected_skew(
                         rng, 1 + static_cast<int>(draw(rng, 9))),
                     trial % 2 ? &b3 : &b2});

  for (const auto& [host, prep] : hosts) {
    const ConvexPreorder& pre = *prep;
    GammaTiling g = gamma_tiling(host, pre);
    GammaTiling alt = gamma_tiling(host, pre, TieBreak::LexGreatestSW);
    // The tiling is tie-break independent as a set of tiles; only the
    // tableau order of equivalent-content tiles may differ.
    std::vector<Shape> gs = g.tiles, as = alt.tiles;
    std::sort(gs.begin(), gs.end());
    std::sort(as.begin(), as.end());
    CHECK(gs == as);
    CHECK(g.partition == alt.partition);
    CHECK(is_tableau(host, g.tiles));
    REQUIRE(g.contents.size() == g.tiles.size());
    for (std::size_t i = 0; i < g.tiles.size(); ++i) {
      CHECK(content(g.tiles[i], pre.e()) == g.contents[i]);
      auto pm = psi_m(g.contents[i]);
      REQUIRE(pm.has_value());
      CHECK(pm->m == 1);
      CHECK(is_cuspidal(g.tiles[i], pre));
      if (i + 1 < g.tiles.size())
        CHECK(pre.compare(g.contents[i], g.contents[i + 1]) != Cmp::Less);
    }
    CHECK(g.partition.total() == content(host, pre.e()));
  }

  CHECK_THROWS_AS(gamma_tiling(Shape{}, bigex()), std::invalid_argument);
  CHECK_THROWS_AS(gamma_tiling(sh({{0, 0}, {1, 1}}), bigex()),
                  std::invalid_argument);
}

TEST_CASE("coarsened tiling merges equal-content runs") {
  Shape host = from_skew_partition({6, 6, 6, 4, 1}, {5, 1, 1, 0, 0}, 0);
  GammaTiling fine = gamma_tiling(host, e2std());
  CHECK(fine.tiles.size() == 9);
  GammaTiling coarse = gamma_sc_tiling(host, e2std());
  REQUIRE(coarse.tiles.size() == 5);
  CHECK(coarse.contents[0] == rv(2, {0, 2}));
  CHECK(coarse.contents[1] == rv(2, {1, 2}));
  CHECK(coarse.contents[2] == rv(2, {3, 3}));
  CHECK(coarse.contents[3] == rv(2, {2, 1}));
  CHECK(coarse.contents[4] == rv(2, {2, 0}));
  CHECK(coarse.partition == fine.partition);
  CHECK(is_tableau(host, coarse.tiles));
  for (std::size_t i = 0; i < coarse.tiles.size(); ++i) {
    CHECK(is_semicuspidal(coarse.tiles[i], e2std()));
    if (i + 1 < coarse.tiles.size()) {
      RootVector a = psi_m(coarse.contents[i])->base;
      RootVector b = psi_m(coarse.contents[i + 1])->base;
      CHECK(e2std().compare(a, b) == Cmp::Greater);
    }
  }

  // A cuspidal host coarsens to itself as a single tile.
  GammaTiling one =
      gamma_sc_tiling(cuspidal_ribbon(rv(3, {2, 1, 1}), Node{0, 0}, bigex())
                          .shape, bigex());
  CHECK(one.tiles.size() == 1);
}

TEST_CASE("representatives list every small cuspidal shape once") {
  auto reps3 = cuspidal_representatives(bigex(), 8);
  // Six admissible heights at e=3 (1,2,4,5,7,8) with three roots each,
  // plus the three imaginary ribbons.
  CHECK(reps3.size() == 6 * 3 + 3);
  // Heights weakly increase across the real prefix and the preorder
  // strictly descends within each height.
  for (std::size_t i = 0; i + 1 < reps3.size() - 3; ++i) {
    Int ha = reps3[i].root.height(), hb = reps3[i + 1].root.height();
    CHECK(ha <= hb);
    if (ha == hb)
      CHECK(bigex().compare(reps3[i].root, reps3[i + 1].root) == Cmp::Greater);
  }
  for (std::size_t i = 0; i < reps3.size(); ++i) {
    CHECK(reps3[i].shape == normalize(reps3[i].shape, 3));
    CHECK(content(reps3[i].shape, 3) == reps3[i].root);
    for (std::size_t j = i + 1; j < reps3.size(); ++j)
      CHECK(!e_similar(reps3[i].shape, reps3[j].shape, 3));
  }
  CHECK(reps3[0].root == rv(3, {1, 0, 0}));
  CHECK(reps3[1].root == rv(3, {0, 1, 0}));
  CHECK(reps3[2].root == rv(3, {0, 0, 1}));
  for (std::size_t i = reps3.size() - 3; i < reps3.size(); ++i)
    CHECK(reps3[i].root == RootVector::delta(3));

  // At e=2 with small height the representatives are exactly the cuspidal
  // shapes found by exhaustive search, up to residue-preserving
  // translation.
  auto reps2 = cuspidal_representatives(e2std(), 3);
  CHECK(reps2.size() == 6);
  std::set<Shape> expected;
  for (const auto& r : reps2) expected.insert(normalize(r.shape, 2));
  std::set<Shape> found;
  for (const Shape& s : connected_skew_shapes(3))
    for (int shift = 0; shift < 2; ++shift) {
      Shape t = s.translated(Node{0, shift});  // both residue alignments
      if (is_cuspidal(t, e2std())) found.insert(normalize(t, 2));
    }
  CHECK(found == expected);
}

}  // TEST_SUITE
