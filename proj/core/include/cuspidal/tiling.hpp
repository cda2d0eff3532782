#pragma once

// Tilings of skew shapes and the removable-ribbon calculus.  A tiling cuts a
// shape into disjoint skew tiles; a tableau orders the tiles so that
// whenever a node of tile i sits northwest of a node of tile j, tile i comes
// no later than tile j.  Kostant tilings additionally have every tile
// content a positive-root multiple and admit a tableau whose contents are
// weakly decreasing under a convex preorder.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cuspidal/preorder.hpp"
#include "cuspidal/roots.hpp"
#include "cuspidal/shape.hpp"

namespace cusp {

// Raised when an enumeration is asked to exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// True iff `tiles`, in the given order, forms a tableau of `host`: tiles are
// nonempty pairwise-disjoint skew shapes covering host, and for nodes u in
// tile i, v in tile j, u southeast-reaches v only if i <= j.
bool is_tableau(const Shape& host, const std::vector<Shape>& tiles);

struct RemovableRibbon {
  Node sw;       // southwest end: south and west neighbors outside the host
  Node ne;       // northeast end: north and east neighbors outside the host
  Shape ribbon;  // the nodes between them with no southeast neighbor in host
};

// All ribbons xi inside a nonempty skew host such that (host \ xi, xi) is a
// two-tile tableau, i.e. xi can be removed "from the southeast".  One ribbon
// per admissible (sw, ne) pair; sorted by (sw, ne) for determinism.
std::vector<RemovableRibbon> removable_ribbons(const Shape& host);

// Tie-break used when several removable ribbons share the minimal content
// class: keep the one with the lexicographically least or greatest
// southwest node.
enum class TieBreak { LexLeastSW, LexGreatestSW };

// A removable ribbon whose content is minimal under the preorder among all
// removable ribbons of the host (ties resolved by `tb`).  Among minimal
// ones, ribbons whose content is a positive root or delta are preferred;
// one always exists.  Host must be a nonempty skew shape.
Shape minimal_se_removable(const Shape& host, const ConvexPreorder& pre,
                           TieBreak tb = TieBreak::LexLeastSW);

// All ways to split host into a two-tile tableau (lower, upper): upper runs
// over the proper nonempty subsets closed upward under southeast
// reachability.  Both parts are automatically skew.  Hosts above the cap
// raise CapExceeded.
std::vector<std::pair<Shape, Shape>> enumerate_two_splits(
    const Shape& host, std::size_t node_cap = 20);

struct KostantTiling {
  std::vector<Shape> tiles;  // in a valid weakly-decreasing tableau order
  std::vector<RootVector> contents;  // contents of tiles, same order
  KostantPartition partition;
};

// Every tiling of host into skew tiles with positive-root-multiple contents
// that admits a weakly decreasing tableau; each is reported once, in a valid
// tableau order.  Hosts above node_cap raise CapExceeded.
std::vector<KostantTiling> enumerate_kostant_tilings(
    const Shape& host, const ConvexPreorder& pre, std::size_t node_cap = 10);

}  // namespace cusp
