#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "cuspidal/preorder.hpp"
#include "cuspidal/roots.hpp"
#include "support.hpp"

using namespace cusp;
using cusp::testing::bigex;
using cusp::testing::e2std;

namespace {

RootVector rv(int e, std::vector<Int> c) { return RootVector(e, std::move(c)); }

// All real positive roots of height <= bound, for the given e.
std::vector<RootVector> real_roots_up_to(int e, Int bound) {
  std::vector<RootVector> out;
  for (int t = 0; t < e; ++t)
    for (Int h = 1; h <= bound; ++h)
      if (h % e != 0) out.push_back(alpha(e, t, static_cast<int>(h)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_SUITE("roots") {

TEST_CASE("alpha expands cyclic runs of simple roots") {
  CHECK(alpha(3, 0, 1) == RootVector::simple(3, 0));
  CHECK(alpha(3, 0, 3) == RootVector::delta(3));
  CHECK(alpha(3, 0, 10) == rv(3, {4, 3, 3}));
  CHECK(alpha(2, 1, 3) == rv(2, {1, 2}));
  CHECK(alpha(3, 2, 2) == rv(3, {1, 0, 1}));
  // The starting residue wraps.
  CHECK(alpha(3, 5, 1) == alpha(3, 2, 1));
  CHECK_THROWS_AS(alpha(3, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(alpha(1, 0, 1), std::invalid_argument);
}

TEST_CASE("alpha splits at any interior point") {
  for (int e : {2, 3})
    for (int t = 0; t < e; ++t)
      for (int h1 = 1; h1 <= 6; ++h1)
        for (int h2 = 1; h2 <= 6; ++h2)
          CHECK(alpha(e, t, h1 + h2) ==
                alpha(e, t, h1) + alpha(e, (t + h1) % e, h2));
}

TEST_CASE("positive_root_form recovers the run parameters") {
  auto f = positive_root_form(rv(3, {1, 1, 0}));
  REQUIRE(f.has_value());
  CHECK(f->t == 0);
  CHECK(f->h == 2);

  CHECK(!positive_root_form(rv(3, {2, 1, 0})).has_value());
  CHECK(!positive_root_form(RootVector::zero(3)).has_value());

  f = positive_root_form(rv(3, {2, 2, 2}));
  REQUIRE(f.has_value());
  CHECK(f->t == 0);  // canonical start for multiples of delta
  CHECK(f->h == 6);

  for (int e : {2, 3})
    for (int t = 0; t < e; ++t)
      for (int h = 1; h <= 12; ++h) {
        auto g = positive_root_form(alpha(e, t, h));
        REQUIRE(g.has_value());
        CHECK(g->h == h);
        CHECK(g->t == (h % e == 0 ? 0 : t));
      }
}

TEST_CASE("classify separates real roots, delta multiples, and the rest") {
  CHECK(classify(rv(3, {1, 1, 0})).kind == RootKind::RealRoot);
  CHECK(classify(rv(3, {2, 1, 1})).kind == RootKind::RealRoot);

  RootClass im = classify(rv(3, {2, 2, 2}));
  CHECK(im.kind == RootKind::ImaginaryRoot);
  CHECK(im.delta_multiple == 2);
  CHECK(classify(rv(3, {3, 3, 3})).delta_multiple == 3);

  CHECK(classify(rv(3, {2, 1, 0})).kind == RootKind::NotARoot);
  CHECK(classify(RootVector::zero(3)).kind == RootKind::NotARoot);

  CHECK(is_positive_root(rv(2, {1, 2})));
  CHECK(!is_positive_root(rv(2, {0, 2})));
}

TEST_CASE("psi_m factors positive-root multiples") {
  auto p = psi_m(rv(3, {3, 3, 3}));
  REQUIRE(p.has_value());
  CHECK(p->m == 3);
  CHECK(p->base == RootVector::delta(3));

  p = psi_m(rv(3, {3, 2, 2}));
  REQUIRE(p.has_value());
  CHECK(p->m == 1);
  CHECK(p->base == rv(3, {3, 2, 2}));

  p = psi_m(rv(3, {2, 2, 0}));
  REQUIRE(p.has_value());
  CHECK(p->m == 2);
  CHECK(p->base == rv(3, {1, 1, 0}));

  CHECK(!psi_m(rv(3, {2, 1, 0})).has_value());
  CHECK(!psi_m(RootVector::zero(3)).has_value());
}

TEST_CASE("psi_m round-trips every multiple up to height 12") {
  for (int e : {2, 3}) {
    std::vector<RootVector> bases = real_roots_up_to(e, 12);
    bases.push_back(RootVector::delta(e));
    for (const RootVector& b : bases)
      for (Int m = 1; m <= 6; ++m) {
        if (m * b.height() > 12) continue;
        auto p = psi_m(b.times(m));
        REQUIRE(p.has_value());
        CHECK(p->m == m);
        CHECK(p->base == b);
      }
  }
}

TEST_CASE("root_name prints delta parts, runs, and multiples") {
  CHECK(root_name(RootVector::delta(3)) == "δ");
  CHECK(root_name(RootVector::simple(2, 1)) == "α1");
  CHECK(root_name(alpha(3, 0, 8)) == "2δ+α0+α1");
  CHECK(root_name(alpha(3, 2, 5)) == "δ+α2+α0");
  CHECK(root_name(RootVector::delta(2).times(3)) == "3δ");
  CHECK(root_name(RootVector::simple(2, 1).times(2)) == "2α1");
  CHECK(root_name(alpha(2, 0, 3).times(2)) == "2(δ+α0)");
  CHECK(root_name(rv(3, {6, 6, 4})) == "2(2δ+α0+α1)");
  CHECK(root_name(rv(3, {6, 5, 4})) == "6α0+5α1+4α2");
}

TEST_CASE("KostantPartition accumulates and totals") {
  KostantPartition k(2);
  k.add(RootVector::simple(2, 1), 2);
  k.add(alpha(2, 1, 3), 1);
  k.add(RootVector::delta(2), 3);
  k.add(alpha(2, 0, 3), 1);
  k.add(RootVector::simple(2, 0), 2);

  CHECK(k.mult(RootVector::delta(2)) == 3);
  CHECK(k.mult(alpha(2, 0, 5)) == 0);
  CHECK(k.total() == rv(2, {8, 8}));

  // Entries print strictly decreasing under the preorder.
  CHECK(k.to_string(e2std()) == "(α1² | δ+α1 | δ³ | δ+α0 | α0²)");
  auto order = k.sorted_entries(e2std());
  REQUIRE(order.size() == 5);
  CHECK(order[0].first == RootVector::simple(2, 1));
  CHECK(order[1].first == alpha(2, 1, 3));
  CHECK(order[2].first == RootVector::delta(2));
  CHECK(order[3].first == alpha(2, 0, 3));
  CHECK(order[4].first == RootVector::simple(2, 0));
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    CHECK(e2std().compare(order[i].first, order[i + 1].first) == Cmp::Greater);

  CHECK_THROWS_AS(k.add(rv(2, {2, 0}), 1), std::invalid_argument);
  CHECK_THROWS_AS(k.add(RootVector::delta(2), 0), std::invalid_argument);
}

TEST_CASE("kostant_from_sequence folds weakly decreasing tile contents") {
  KostantPartition k = kostant_from_sequence(
      {rv(2, {1, 2}), rv(2, {1, 1}), rv(2, {2, 1})}, e2std());
  CHECK(k.mult(rv(2, {1, 2})) == 1);
  CHECK(k.mult(RootVector::delta(2)) == 1);
  CHECK(k.mult(rv(2, {2, 1})) == 1);
  CHECK(k.total() == rv(2, {4, 4}));

  CHECK(kostant_from_sequence({}, e2std()).empty());

  KostantPartition im =
      kostant_from_sequence({rv(2, {1, 1}), rv(2, {2, 2})}, e2std());
  CHECK(im.mult(RootVector::delta(2)) == 3);
  CHECK(im.entries().size() == 1);

  // Ascending contents are rejected with the offending position named.
  CHECK_THROWS_WITH_AS(
      kostant_from_sequence({rv(2, {2, 1}), rv(2, {1, 2})}, e2std()),
      doctest::Contains("1"), std::invalid_argument);
  // Entries outside the positive-root multiples are rejected.
  CHECK_THROWS_AS(kostant_from_sequence({rv(3, {2, 1, 0})}, bigex()),
                  std::invalid_argument);
}

TEST_CASE("bilex_compare on the documented pairs") {
  KostantPartition a(2), b(2);
  a.add(alpha(2, 1, 3), 1);  // one tall run from residue 1
  a.add(RootVector::simple(2, 0), 1);
  b.add(RootVector::simple(2, 1), 1);
  b.add(alpha(2, 0, 3), 1);
  REQUIRE(a.total() == b.total());

  BilexVerdict v = bilex_compare(a, b, e2std());
  CHECK(v.overall == BilexResult::Incomparable);
  CHECK(v.right == LexOrder::Greater);
  CHECK(v.left == LexOrder::Less);

  BilexVerdict w = bilex_compare(b, a, e2std());
  CHECK(w.overall == BilexResult::Incomparable);
  CHECK(w.right == LexOrder::Less);
  CHECK(w.left == LexOrder::Greater);

  CHECK(bilex_compare(a, a, e2std()).overall == BilexResult::Equal);

  KostantPartition c(2);
  c.add(RootVector::delta(2), 2);
  CHECK(bilex_compare(a, c, e2std()).overall == BilexResult::GreaterBoth);
  CHECK(bilex_compare(c, a, e2std()).overall == BilexResult::LessBoth);

  KostantPartition other(2);
  other.add(RootVector::delta(2), 1);
  CHECK_THROWS_AS(bilex_compare(a, other, e2std()), std::invalid_argument);
}

TEST_CASE("bilex_compare is a partial order on partitions of one content") {
  // All five partitions of twice the null root for e = 2.
  auto make = [](std::initializer_list<std::pair<RootVector, Int>> entries) {
    KostantPartition k(2);
    for (const auto& [root, mult] : entries) k.add(root, mult);
    return k;
  };
  const RootVector a0 = RootVector::simple(2, 0), a1 = RootVector::simple(2, 1);
  const RootVector d = RootVector::delta(2);
  std::vector<KostantPartition> all = {
      make({{a0, 2}, {a1, 2}}),
      make({{a0, 1}, {a1, 1}, {d, 1}}),
      make({{d, 2}}),
      make({{alpha(2, 0, 3), 1}, {a1, 1}}),
      make({{alpha(2, 1, 3), 1}, {a0, 1}}),
  };
  for (const auto& k : all) REQUIRE(k.total() == rv(2, {2, 2}));

  auto geq = [&](const KostantPartition& x, const KostantPartition& y) {
    BilexResult r = bilex_compare(x, y, e2std()).overall;
    return r == BilexResult::Equal || r == BilexResult::GreaterBoth;
  };
  for (const auto& x : all) CHECK(geq(x, x));  // reflexive
  for (const auto& x : all)
    for (const auto& y : all) {
      BilexVerdict xy = bilex_compare(x, y, e2std());
      BilexVerdict yx = bilex_compare(y, x, e2std());
      // Mirrored verdicts.
      CHECK((xy.overall == BilexResult::Equal) == (yx.overall == BilexResult::Equal));
      CHECK((xy.overall == BilexResult::GreaterBoth) ==
            (yx.overall == BilexResult::LessBoth));
      // Antisymmetry: Equal only for identical partitions.
      if (xy.overall == BilexResult::Equal) CHECK(x == y);
    }
  for (const auto& x : all)  // transitivity
    for (const auto& y : all)
      for (const auto& z : all)
        if (geq(x, y) && geq(y, z)) CHECK(geq(x, z));
}

}  // TEST_SUITE
