#pragma once

// Cuspidal and semicuspidal skew shapes.  A shape with positive-root content
// beta is cuspidal when every two-tile tableau splits its content strictly
// around beta: the lower tile's content decomposes into roots strictly below
// beta, the upper tile's into roots strictly above.  Semicuspidal shapes
// (content a multiple m*beta) satisfy the weak version.  Every real positive
// root and every residue carries a canonical cuspidal ribbon, built by a
// greedy north/east walk; greedy removal of minimal ribbons yields the
// canonical tiling, whose Kostant partition dominates that of every other
// Kostant tiling of the same shape.

#include <vector>

#include "cuspidal/preorder.hpp"
#include "cuspidal/roots.hpp"
#include "cuspidal/shape.hpp"
#include "cuspidal/tiling.hpp"

namespace cusp {

// Residues t such that a ribbon of the given content can start at a node of
// residue t (southwest end).  Real roots alpha(t, h) admit exactly t; delta
// admits every residue.  Arguments outside Psi raise std::invalid_argument.
std::vector<int> init_residues(const RootVector& beta);

struct CuspidalRibbon {
  Shape shape;
  RootVector root;  // content; an element of Psi
  Node base;        // southwest node the walk started from
};

// The canonical cuspidal ribbon of content beta (an element of Psi) grown
// from base node b: starting at b, each step goes north when the content so
// far is strictly above beta, east when strictly below.  b's residue must be
// admissible for beta.
CuspidalRibbon cuspidal_ribbon(const RootVector& beta, Node b,
                               const ConvexPreorder& pre);

enum class CuspMethod {
  Auto,   // ribbon shortcut when available, otherwise two-split search
  Brute,  // always the exhaustive two-split search
};

// Whether the shape is cuspidal for the preorder.  Shapes whose content is
// not a positive root are never cuspidal.  Auto mode uses the
// removable-ribbon test on ribbons and classifies non-ribbons as not
// cuspidal; Brute mode runs the exhaustive two-split search (the
// classification oracle checks the two agree).
bool is_cuspidal(const Shape& s, const ConvexPreorder& pre,
                 CuspMethod method = CuspMethod::Auto);

// Whether the shape is semicuspidal: content m*beta for some positive root
// beta, and every canonical-tiling tile has content exactly psi(content).
// Brute mode runs the weak two-split search instead (hosts above ~10 nodes
// get expensive).
bool is_semicuspidal(const Shape& s, const ConvexPreorder& pre,
                     CuspMethod method = CuspMethod::Auto);

struct GammaTiling {
  std::vector<Shape> tiles;          // tableau order (first tile first)
  std::vector<RootVector> contents;  // tile contents, same order
  KostantPartition partition;
};

// The canonical tiling: repeatedly delete a minimal removable ribbon until
// the shape is exhausted; the tableau reads the deletions in reverse.  Tile
// contents are weakly decreasing, every tile is a cuspidal ribbon, and the
// resulting tiling is independent of the tie-break.  Host must be a
// nonempty skew shape.
GammaTiling gamma_tiling(const Shape& host, const ConvexPreorder& pre,
                         TieBreak tb = TieBreak::LexLeastSW);

// The coarsened canonical tiling: consecutive equal-content tiles of the
// canonical tiling merged into single (possibly disconnected) tiles.  Tile
// contents become strictly decreasing positive-root multiples; the Kostant
// partition is unchanged.
GammaTiling gamma_sc_tiling(const Shape& host, const ConvexPreorder& pre);

// Canonical cuspidal ribbons of every content in Psi up to the height
// bound: one per real positive root (grown from (0, t)) plus one per
// residue for delta.  Real roots are listed by increasing height and
// preorder-descending within a height, then the delta family by residue.
// Up to residue-preserving translation these are exactly the cuspidal
// shapes in that height range.
std::vector<CuspidalRibbon> cuspidal_representatives(const ConvexPreorder& pre,
                                                     Int height_bound);

}  // namespace cusp
