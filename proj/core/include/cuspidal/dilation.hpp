#pragma once

// Dilation: the content-m*delta semicuspidal shapes are exactly the images
// of connected shapes under a residue-indexed "inflation" that replaces
// every node by a copy of the canonical delta-ribbon of that residue.  The
// placement grid is an affine frame (base, x, y): the copy for node
// (row, col) is based at base + col*x - row*y, so east steps in the core
// move the copy by x and north steps move it by y.  undilate inverts the
// construction; build_imaginary_semicuspidal assembles the general
// (multi-component) classification representatives.

#include <optional>
#include <utility>
#include <vector>

#include "cuspidal/cuspidal.hpp"
#include "cuspidal/preorder.hpp"
#include "cuspidal/shape.hpp"

namespace cusp {

struct DilationFrame {
  int t = 0;   // residue of the delta-ribbon being replicated
  Node base;   // southwest node of the residue-t delta ribbon at (0, t)
  Node x;      // displacement of the copy per east step of the core
  Node y;      // displacement of the copy per north step of the core
};

// The frame for residue t under the preorder: base is (0, t); with ne the
// northeast node of the canonical delta ribbon grown there, x = east(ne) -
// base and y = north(ne) - base.  Both x and y have residue 0 and
// x - y = (1, 1).  Frames are cached per (preorder, t); the cache is
// guarded for concurrent use.
const DilationFrame& frame(int t, const ConvexPreorder& pre);

// The grid map of the frame: base + row*y + col*x.
Node phi(const DilationFrame& f, Node u);

// Replaces every node u of the core by a translated copy of the residue-t
// delta ribbon based at base + u.col*x - u.row*y.  A connected skew core
// yields a connected skew image of content |core|*delta.
Shape dilate(int t, const Shape& core, const ConvexPreorder& pre);

// Recognizes a dilation image: if s == dilate(t, core) for some residue t
// and skew core, returns (t, core); otherwise nothing.  Works by
// reading the canonical tiling of s: all tiles must be translates of one
// residue's delta ribbon arranged on the frame grid.
std::optional<std::pair<int, Shape>> undilate(const Shape& s,
                                              const ConvexPreorder& pre);

// Assembles the canonical content-m*delta semicuspidal shape from a list of
// (connected core, residue) components given northeast-most first: each core
// is dilated at its residue and the results are stacked southwest to
// northeast at the canonical gap.  Cores must be nonempty connected skew
// shapes; violations raise std::invalid_argument.
Shape build_imaginary_semicuspidal(
    const std::vector<std::pair<Shape, int>>& components,
    const ConvexPreorder& pre);

}  // namespace cusp
