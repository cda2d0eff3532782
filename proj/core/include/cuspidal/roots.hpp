#pragma once

// Root-lattice arithmetic for the cyclic (affine type A) root system with e
// residue classes.  A RootVector is a vector of nonnegative coefficients over
// the simple roots alpha_0, ..., alpha_{e-1}.  The positive roots are the
// "cyclic interval" vectors alpha(t, h) whose height h is not a multiple of
// e, together with the multiples of the null root delta = alpha_0 + ... +
// alpha_{e-1}.  Kostant partitions record multiplicities over the set
// Psi = { real positive roots } + { delta }.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cusp {

using Int = long long;

class ConvexPreorder;  // preorder.hpp

// ---------------------------------------------------------------------------
// RootVector

class RootVector {
 public:
  RootVector() = default;
  RootVector(int e, std::vector<Int> coeffs);

  static RootVector zero(int e);
  static RootVector simple(int e, int i);  // alpha_i, i taken mod e
  static RootVector delta(int e);          // all-ones vector

  int e() const { return e_; }
  Int operator[](int i) const;  // i taken mod e
  const std::vector<Int>& coeffs() const { return c_; }
  Int height() const;  // sum of coefficients
  bool is_zero() const;

  RootVector& operator+=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) {
    a += b;
    return a;
  }
  // Coordinatewise difference; absent if any coordinate would go negative.
  std::optional<RootVector> minus(const RootVector& o) const;
  RootVector times(Int m) const;

  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend std::strong_ordering operator<=>(const RootVector&,
                                          const RootVector&) = default;

 private:
  int e_ = 0;
  std::vector<Int> c_;
};

// ---------------------------------------------------------------------------
// Positive roots

// The height-h cyclic interval starting at residue t: the sum of the h
// consecutive simple roots alpha_t + alpha_{t+1} + ... + alpha_{t+h-1}
// (indices mod e).  Requires e >= 2 and h >= 1; t is reduced mod e.
RootVector alpha(int e, int t, Int h);

struct PositiveRootForm {
  int t;  // starting residue, in [0, e)
  Int h;  // height, >= 1
};

// Recovers (t, h) with v == alpha(e, t, h), if v has that form.  The form is
// unique except for multiples of delta, where every t works; those report
// t == 0.  Zero and "ragged" vectors report nothing.
std::optional<PositiveRootForm> positive_root_form(const RootVector& v);

enum class RootKind { NotARoot, RealRoot, ImaginaryRoot };

struct RootClass {
  RootKind kind = RootKind::NotARoot;
  Int delta_multiple = 0;  // m for v == m*delta, 0 otherwise
};

// RealRoot for alpha(t,h) with h not divisible by e, ImaginaryRoot for
// m*delta (m >= 1), NotARoot otherwise.
RootClass classify(const RootVector& v);

bool is_positive_root(const RootVector& v);

struct PsiDecomposition {
  Int m = 0;          // multiplicity, >= 1
  RootVector base;    // element of Psi: a real positive root, or delta
};

// Writes v as m * base with base in Psi, if possible: real positive roots
// report m == 1 and multiples m*delta report base == delta.  Vectors m*beta
// with beta real and m >= 2 also qualify.  Everything else reports nothing.
std::optional<PsiDecomposition> psi_m(const RootVector& v);

// Human-readable name.  Elements of Psi print as a delta-part plus a run of
// simple roots following the cyclic interval, e.g. "2δ+α0+α1", "δ+α2+α0",
// "δ", "α1".  Multiples m*beta (m >= 2) print as "3δ", "2α1" or
// "2(δ+α0)".  Other vectors fall back to a plain sum like "6α0+6α1+4α2".
std::string root_name(const RootVector& v);

// ---------------------------------------------------------------------------
// Kostant partitions

// A finitely supported multiplicity function on Psi.
class KostantPartition {
 public:
  KostantPartition() = default;
  explicit KostantPartition(int e) : e_(e) {}

  int e() const { return e_; }
  // base must lie in Psi (a real positive root or delta); mult >= 1.
  void add(const RootVector& base, Int mult);
  Int mult(const RootVector& base) const;
  const std::map<RootVector, Int>& entries() const { return m_; }
  bool empty() const { return m_.empty(); }
  // Sum of mult * base over all entries.
  RootVector total() const;

  friend bool operator==(const KostantPartition&,
                         const KostantPartition&) = default;

  // Entries sorted strictly decreasing under the preorder (distinct elements
  // of Psi are never equivalent, so the order is total).
  std::vector<std::pair<RootVector, Int>> sorted_entries(
      const ConvexPreorder& pre) const;

  // "(α1² | δ+α1 | δ³ | δ+α0 | α0²)": entries in decreasing order, each with
  // a superscript multiplicity when it exceeds one.
  std::string to_string(const ConvexPreorder& pre) const;

 private:
  int e_ = 0;
  std::map<RootVector, Int> m_;
};

// Folds a sequence of tile contents (each in the set of positive-root
// multiples m*beta) into the Kostant partition that adds m to the entry of
// beta for each term.  The psi-values of the sequence must be weakly
// decreasing under the preorder; violations and non-decomposable entries are
// reported via std::invalid_argument naming the offending index.
KostantPartition kostant_from_sequence(const std::vector<RootVector>& seq,
                                       const ConvexPreorder& pre);

// ---------------------------------------------------------------------------
// Bilexicographic dominance

enum class LexOrder { Less, Equal, Greater };

enum class BilexResult { Equal, GreaterBoth, LessBoth, Incomparable };

struct BilexVerdict {
  BilexResult overall = BilexResult::Equal;
  LexOrder right = LexOrder::Equal;  // lex from the minimal end of the preorder
  LexOrder left = LexOrder::Equal;   // lex from the maximal end of the preorder
};

// Compares two Kostant partitions of the same total content.  "Right" order:
// scanning Psi upward from the preorder's minimal end, the first entry where
// the partitions differ decides, larger multiplicity first wins... i.e. a
// partition is right-greater if at the first difference (seen from the small
// end) it has the larger multiplicity.  "Left" order is the mirror image from
// the maximal end.  The overall verdict combines the two: GreaterBoth /
// LessBoth when the two agree strictly, Equal when both are Equal,
// Incomparable otherwise.  Mismatched totals raise std::invalid_argument.
BilexVerdict bilex_compare(const KostantPartition& a, const KostantPartition& b,
                           const ConvexPreorder& pre);

}  // namespace cusp
