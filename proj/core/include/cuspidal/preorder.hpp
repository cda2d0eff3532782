#pragma once

// Convex preorders on the positive roots, realized by a linear functional
// h : residues -> Z^2.  A root beta is weighed by h(beta)/height(beta) in
// Q^2 ordered lexicographically; beta >= gamma iff its weight is >= the
// other's.  Comparisons are exact (integer cross-multiplication, widened to
// 128 bits), never floating point.  Reversal flips every comparison.
//
// Two presets ship with the library:
//   "bigex"        e = 3, h = (2,1), (-1,0), (-1,-1)
//   "e2-standard"  e = 2, h = (-1,0), (1,0)

#include <array>
#include <string>
#include <vector>

#include "cuspidal/roots.hpp"

namespace cusp {

enum class Cmp { Less, Equivalent, Greater };

class ConvexPreorder {
 public:
  // h must assign one integer pair per residue.  Whether the resulting
  // preorder is genuinely convex depends on h; see verify_axioms().
  static ConvexPreorder functional(int e,
                                   std::vector<std::array<Int, 2>> h);
  static ConvexPreorder preset(const std::string& name);
  ConvexPreorder reversed() const;

  int e() const { return e_; }
  bool is_reversed() const { return reversed_; }
  const std::vector<std::array<Int, 2>>& h_assignment() const { return h_; }
  // Preset name when constructed from one ("bigex", "e2-standard"), else "".
  const std::string& preset_name() const { return preset_; }
  // Stable identity string, usable as a cache key.
  std::string key() const;
  // Short human-readable description.
  std::string describe() const;

  // Both arguments must be positive roots with matching e; violations raise
  // std::invalid_argument.  Equivalent is returned exactly when the
  // arguments' weights coincide; for a convex preorder that means equal
  // roots or two imaginary roots.
  Cmp compare(const RootVector& beta, const RootVector& gamma) const;

  bool strictly_greater(const RootVector& b, const RootVector& g) const {
    return compare(b, g) == Cmp::Greater;
  }
  bool weakly_greater(const RootVector& b, const RootVector& g) const {
    return compare(b, g) != Cmp::Less;
  }

  friend bool operator==(const ConvexPreorder&, const ConvexPreorder&);

 private:
  ConvexPreorder() = default;

  int e_ = 0;
  std::vector<std::array<Int, 2>> h_;
  bool reversed_ = false;
  std::string preset_;
};

// ---------------------------------------------------------------------------
// Axiom verification

struct AxiomViolation {
  std::string axiom;    // "reflexivity", "totality", "transitivity",
                        // "convexity", "imaginary-equivalence",
                        // "equivalence-separation"
  std::string witness;  // the offending roots, printed
};

struct AxiomReport {
  Int height_bound = 0;
  long cases_checked = 0;
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Exhaustively checks the preorder axioms on all positive roots of height
// <= height_bound: reflexivity and totality; transitivity over all triples;
// convexity (beta >= gamma implies beta >= beta+gamma >= gamma whenever
// beta+gamma is a root within the bound); all imaginary roots mutually
// equivalent; and equivalence only between equal or imaginary roots.
AxiomReport verify_axioms(const ConvexPreorder& pre, Int height_bound);

// ---------------------------------------------------------------------------
// Root decomposition relative to a pivot

enum class Direction { Below, Above };
enum class Strictness { Strict, Weak };

// Memoizing engine for one fixed question shape: can a vector be written as
// a nonempty sum of positive roots each strictly (or weakly) below (or
// above) the pivot?
class Decomposer {
 public:
  Decomposer(const ConvexPreorder& pre, RootVector pivot, Direction dir,
             Strictness strictness);

  // True iff theta is a nonempty sum of admissible positive roots.
  bool decomposes(const RootVector& theta);

 private:
  bool admissible(const RootVector& part) const;
  const ConvexPreorder& pre_;
  RootVector pivot_;
  Direction dir_;
  Strictness strictness_;
  std::map<RootVector, bool> memo_;
};

// One-shot convenience wrapper around Decomposer.
bool decomposes(const RootVector& theta, const RootVector& pivot,
                Direction dir, Strictness strictness,
                const ConvexPreorder& pre);

}  // namespace cusp
