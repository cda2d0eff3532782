#pragma once

// Exhaustive shape generators backing the verification oracles and property
// tests.

#include <vector>

#include "cuspidal/shape.hpp"

namespace cusp {

// All skew shapes with 1..max_nodes nodes contained in the window
// [0, rows) x [0, cols).  Every placement inside the window is reported
// (no deduplication up to translation).
std::vector<Shape> skew_shapes_in_window(int rows, int cols, int max_nodes);

// All connected skew shapes with 1..max_nodes nodes, one representative per
// translation class, anchored so the minimal row and column are 0.
std::vector<Shape> connected_skew_shapes(int max_nodes);

}  // namespace cusp
