#pragma once

// Skew shapes as finite sets of grid nodes.  A node is a (row, col) pair;
// rows grow southward, columns grow eastward, and the residue of a node is
// (col - row) mod e.  Node u lies northwest of v (written here as
// se_of(u, v), "v is reachable going south/east from u") when v is obtained
// from u by south and east steps, including zero steps in one direction.  A
// shape is skew when it is closed under betweenness for that relation.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuspidal/roots.hpp"

namespace cusp {

struct Node {
  int row = 0;
  int col = 0;
  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

inline Node north(Node u) { return {u.row - 1, u.col}; }
inline Node south(Node u) { return {u.row + 1, u.col}; }
inline Node east(Node u) { return {u.row, u.col + 1}; }
inline Node west(Node u) { return {u.row, u.col - 1}; }
inline Node southeast(Node u) { return {u.row + 1, u.col + 1}; }
inline Node northwest(Node u) { return {u.row - 1, u.col - 1}; }
inline Node translate(Node u, Node d) { return {u.row + d.row, u.col + d.col}; }

inline int diagonal(Node u) { return u.col - u.row; }
int residue(Node u, int e);  // (col - row) mod e, in [0, e)

// v reachable from u by south/east steps (u == v counts).
inline bool se_of(Node u, Node v) {
  return v.row >= u.row && v.col >= u.col;
}
// v reachable from u by north/east steps (u == v counts).
inline bool ne_of(Node u, Node v) {
  return v.row <= u.row && v.col >= u.col;
}

// ---------------------------------------------------------------------------
// Shape: an immutable, deduplicated, sorted node set.

class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<Node> nodes);  // sorts and dedups

  const std::vector<Node>& nodes() const { return nodes_; }
  bool contains(Node u) const;
  std::size_t size() const { return nodes_.size(); }
  bool empty() const { return nodes_.empty(); }

  Shape translated(Node d) const;
  Shape minus(const Shape& o) const;
  Shape unite(const Shape& o) const;
  bool disjoint_from(const Shape& o) const;

  friend bool operator==(const Shape&, const Shape&) = default;
  friend auto operator<=>(const Shape&, const Shape&) = default;

 private:
  std::vector<Node> nodes_;  // sorted by (row, col)
};

// ---------------------------------------------------------------------------
// Classification

struct ShapeClass {
  bool skew = false;       // closed under south/east betweenness
  bool thin = false;       // at most one node per diagonal
  bool connected = false;  // edge-connected (empty shape: false)
  bool cornered = false;   // at most one node lacking both south and west
                           // neighbors, at most one lacking north and east
  bool diagonal_convex = false;  // on each diagonal the nodes form one
                                 // contiguous southeast run
  bool ribbon = false;  // nonempty, thin, connected, skew
  bool young = false;   // empty, or skew with a node northwest of all others
};

ShapeClass validate(const Shape& s);
bool is_skew(const Shape& s);

// Sum of simple roots over the nodes' residues.
RootVector content(const Shape& s, int e);

// Connected components of a skew (or arbitrary) shape via edge adjacency,
// ordered from the southwest-most component to the northeast-most.
std::vector<Shape> components(const Shape& s);

// The unique southwest-most and northeast-most nodes of a nonempty skew
// shape: sw satisfies ne_of(sw, w) for every node w, and ne likewise from
// the other side.  Raises std::invalid_argument when the shape is empty or
// no such nodes exist.
std::pair<Node, Node> extremes(const Shape& s);

// Nodes of lambda/mu placed with row r in [1, #lambda], columns
// (mu_r, lambda_r], then shifted east by charge.  lambda and mu must be
// partitions (weakly decreasing, nonnegative) with mu inside lambda.
Shape from_skew_partition(const std::vector<Int>& lambda,
                          const std::vector<Int>& mu, int charge);

// Stacks nonempty connected skew shapes southwest to northeast at the
// canonical gap: the first component's southwest node lands at
// (0, residue); each later component starts diagonally adjacent to its
// predecessor's northeast node and is shifted east by the least amount
// restoring its residues.  Every component is translated
// residue-preservingly; the result is skew with the inputs as components.
Shape stack_components(const std::vector<Shape>& southwest_first, int e);

// Canonical representative of the residue-preserving-translation class of a
// skew shape: its components, re-stacked by stack_components.
Shape normalize(const Shape& s, int e);

// True when the two shapes have identical normal forms: componentwise
// residue-preserving translates stacked in the same order.
bool e_similar(const Shape& a, const Shape& b, int e);

// Point reflection (row, col) -> (-col, -row); swaps the roles of
// north/east and preserves residues; every south/east relation between two
// nodes is reversed.
Shape reverse(const Shape& s);

// Step word of a ribbon walked from its southwest node to its northeast
// node, 'N' and 'E' per step; the single-node ribbon yields "".  Absent when
// the shape is not a ribbon.
std::optional<std::string> ribbon_path(const Shape& s);

// Sorted-node canonical string, e.g. "{(0,0),(1,2)}" — handy in messages.
std::string to_string(const Shape& s);

}  // namespace cusp
