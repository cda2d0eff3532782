#pragma once

// JSON serialization.  Formats:
//   root            [c0, c1, ...]
//   kostant         [{"root": [...], "mult": n}, ...], decreasing order
//   shape           {"nodes": [[row, col], ...]}  or
//                   {"skew": {"lambda": [...], "mu": [...], "charge": c}}
//   preorder        {"e": 3, "preset": "bigex"}            or
//                   {"e": 3, "h": [[2,1],[-1,0],[-1,-1]]}  or
//                   {"reverse": <preorder>}
//   tiling          {"tiles": [shape...], "contents": [root...],
//                    "kostant": [...]}, tiles in tableau order
//   components      [{"shape": {...}, "color": t}, ...]
// Parsers accept exactly these layouts and raise std::invalid_argument with
// a path-qualified message otherwise.

#include <string>
#include <utility>
#include <vector>

#include "cuspidal/cuspidal.hpp"
#include "cuspidal/preorder.hpp"
#include "cuspidal/roots.hpp"
#include "cuspidal/shape.hpp"

namespace cusp {

std::string root_to_json(const RootVector& v);
RootVector root_from_json(const std::string& text, int e);

std::string kostant_to_json(const KostantPartition& k,
                            const ConvexPreorder& pre);

std::string shape_to_json(const Shape& s);
Shape shape_from_json(const std::string& text);

std::string preorder_to_json(const ConvexPreorder& pre);
ConvexPreorder preorder_from_json(const std::string& text);

std::string tiling_to_json(const GammaTiling& g, const ConvexPreorder& pre);

std::string components_to_json(
    const std::vector<std::pair<Shape, int>>& components);
std::vector<std::pair<Shape, int>> components_from_json(
    const std::string& text);

}  // namespace cusp
