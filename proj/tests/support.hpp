#pragma once

// Shared helpers for the test suite: tiny shape builders, preorder fixtures,
// and seeded random skew-shape generators used by the property tests.

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include <random>

#include "cuspidal/preorder.hpp"
#include "cuspidal/shape.hpp"

namespace cusp::testing {

inline Shape sh(std::initializer_list<std::pair<int, int>> nodes) {
  std::vector<Node> v;
  v.reserve(nodes.size());
  for (auto [r, c] : nodes) v.push_back(Node{r, c});
  return Shape(std::move(v));
}

inline const ConvexPreorder& bigex() {
  static const ConvexPreorder p = ConvexPreorder::preset("bigex");
  return p;
}

inline const ConvexPreorder& e2std() {
  static const ConvexPreorder p = ConvexPreorder::preset("e2-standard");
  return p;
}

// mt19937 output is pinned by the standard; drawing with modulo keeps the
// generated populations identical across standard libraries, unlike
// std::uniform_int_distribution.
inline int draw(std::mt19937& rng, int n) {
  return static_cast<int>(rng() % static_cast<unsigned>(n));
}

// Connected skew shape grown from the origin by repeatedly attaching a
// random grid neighbor that keeps the skew property; restarts on dead ends.
inline Shape random_connected_skew(std::mt19937& rng, int target_nodes) {
  for (;;) {
    Shape cur = sh({{0, 0}});
    bool stuck = false;
    while (static_cast<int>(cur.size()) < target_nodes) {
      std::vector<Node> cands;
      for (Node u : cur.nodes())
        for (Node v : {north(u), south(u), east(u), west(u)})
          if (!cur.contains(v)) cands.push_back(v);
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
      // Try candidates in random order until one keeps the shape skew.
      bool grew = false;
      while (!cands.empty()) {
        int i = draw(rng, static_cast<int>(cands.size()));
        Shape next = cur.unite(Shape({cands[i]}));
        if (is_skew(next)) {
          cur = std::move(next);
          grew = true;
          break;
        }
        cands.erase(cands.begin() + i);
      }
      if (!grew) {
        stuck = true;
        break;
      }
    }
    if (!stuck) return cur;
  }
}

// A residue-preserving random translate: any multiple of (1,1) plus any
// multiple of (0,e).
inline Shape random_translate(std::mt19937& rng, const Shape& s, int e) {
  int d = draw(rng, 7) - 3;
  int k = draw(rng, 3) - 1;
  return s.translated(Node{d, d + k * e});
}

// One or two connected pieces, the second placed strictly north-east of the
// first with a residue-preserving gap, so disconnected skew shapes are
// exercised too.
inline Shape random_skew(std::mt19937& rng, int max_nodes, int e) {
  int total = 1 + draw(rng, max_nodes);
  int parts = total >= 2 && draw(rng, 3) == 0 ? 2 : 1;
  int first = parts == 2 ? 1 + draw(rng, total - 1) : total;
  Shape out = random_translate(rng, random_connected_skew(rng, first), e);
  if (parts == 2) {
    Shape p2 = random_connected_skew(rng, total - first);
    Node ne1 = extremes(out).second;
    Node sw2 = extremes(p2).first;
    // Strictly north and strictly east of everything placed so far.
    int drow = ne1.row - sw2.row - 1 - draw(rng, 2);
    int dcol = ne1.col - sw2.col + 1 + draw(rng, 2);
    int fix = ((drow - dcol) % e + e) % e;
    out = out.unite(p2.translated(Node{drow, dcol + fix}));
  }
  return out;
}

// A 30-node disconnected skew shape for e = 2 with three antidiagonally
// separated components of sizes 10, 16, and 4 (southwest to northeast).
// Each component is a stack of vertical or horizontal dominoes, so the
// whole shape has content 15*delta.
inline Shape three_component_sample() {
  std::vector<Node> v;
  // Southwest component: columns of heights 4, 4, 2.
  for (int y = 0; y <= 3; ++y) v.push_back(Node{-y, 1});
  for (int y = 1; y <= 4; ++y) v.push_back(Node{-y, 2});
  for (int y = 4; y <= 5; ++y) v.push_back(Node{-y, 3});
  // Middle component: rows of widths 6, 4, 4, 2 climbing north-east.
  for (int x = 5; x <= 10; ++x) v.push_back(Node{-7, x});
  for (int x = 8; x <= 11; ++x) v.push_back(Node{-8, x});
  for (int x = 9; x <= 12; ++x) v.push_back(Node{-9, x});
  for (int x = 12; x <= 13; ++x) v.push_back(Node{-10, x});
  // Northeast component: a 2x2 staircase of vertical dominoes.
  v.push_back(Node{-12, 15});
  v.push_back(Node{-13, 15});
  v.push_back(Node{-13, 16});
  v.push_back(Node{-14, 16});
  return Shape(std::move(v));
}

// Calls fn with every subset of at most max_nodes cells of a rows x cols
// window, as a sorted node vector.
template <typename Fn>
inline void for_each_window_subset(int rows, int cols, int max_nodes,
                                   const Fn& fn) {
  const int total = rows * cols;
  std::vector<Node> cur;
  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == total) {
      fn(cur);
      return;
    }
    self(self, idx + 1);
    if (static_cast<int>(cur.size()) < max_nodes) {
      cur.push_back(Node{idx / cols, idx % cols});
      self(self, idx + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace cusp::testing
