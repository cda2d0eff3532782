#include "cuspidal/roots.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cuspidal/preorder.hpp"

namespace cusp {

namespace {

int reduce_mod(long long v, int e) {
  long long r = v % e;
  return static_cast<int>(r < 0 ? r + e : r);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::string superscript(Int m) {
  static const char* digit[10] = {"⁰", "¹", "²", "³",
                                  "⁴", "⁵", "⁶", "⁷",
                                  "⁸", "⁹"};
  std::string plain = std::to_string(m);
  std::string out;
  for (char c : plain) out += digit[c - '0'];
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// RootVector

RootVector::RootVector(int e, std::vector<Int> coeffs)
    : e_(e), c_(std::move(coeffs)) {
  require(e >= 2, "RootVector: e must be at least 2");
  require(static_cast<int>(c_.size()) == e,
          "RootVector: expected " + std::to_string(e) + " coefficients, got " +
              std::to_string(c_.size()));
  for (Int v : c_)
    require(v >= 0, "RootVector: coefficients must be nonnegative");
}

RootVector RootVector::zero(int e) {
  return RootVector(e, std::vector<Int>(e, 0));
}

RootVector RootVector::simple(int e, int i) {
  RootVector v = zero(e);
  v.c_[reduce_mod(i, e)] = 1;
  return v;
}

RootVector RootVector::delta(int e) {
  return RootVector(e, std::vector<Int>(e, 1));
}

Int RootVector::operator[](int i) const {
  require(e_ > 0, "RootVector: uninitialized");
  return c_[reduce_mod(i, e_)];
}

Int RootVector::height() const {
  return std::accumulate(c_.begin(), c_.end(), Int{0});
}

bool RootVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Int v) { return v == 0; });
}

RootVector& RootVector::operator+=(const RootVector& o) {
  require(e_ == o.e_, "RootVector: mixed e in addition");
  for (int i = 0; i < e_; ++i) c_[i] += o.c_[i];
  return *this;
}

std::optional<RootVector> RootVector::minus(const RootVector& o) const {
  require(e_ == o.e_, "RootVector: mixed e in subtraction");
  std::vector<Int> out(c_);
  for (int i = 0; i < e_; ++i) {
    out[i] -= o.c_[i];
    if (out[i] < 0) return std::nullopt;
  }
  return RootVector(e_, std::move(out));
}

RootVector RootVector::times(Int m) const {
  require(m >= 0, "RootVector: negative multiple");
  std::vector<Int> out(c_);
  for (Int& v : out) v *= m;
  return RootVector(e_, std::move(out));
}

// ---------------------------------------------------------------------------
// Positive roots

RootVector alpha(int e, int t, Int h) {
  require(e >= 2, "alpha: e must be at least 2");
  require(h >= 1, "alpha: height must be positive");
  std::vector<Int> c(e, h / e);
  int start = reduce_mod(t, e);
  for (Int j = 0; j < h % e; ++j) c[reduce_mod(start + j, e)] += 1;
  return RootVector(e, std::move(c));
}

std::optional<PositiveRootForm> positive_root_form(const RootVector& v) {
  if (v.e() < 2 || v.is_zero()) return std::nullopt;
  const auto& c = v.coeffs();
  const int e = v.e();
  Int lo = *std::min_element(c.begin(), c.end());
  Int hi = *std::max_element(c.begin(), c.end());
  if (hi - lo > 1) return std::nullopt;
  if (hi == lo) return PositiveRootForm{0, lo * e};  // multiple of delta
  // The residues carrying lo+1 must form one cyclic interval; its start is
  // the unique residue t with c[t-1] == lo and c[t] == lo+1.
  int start = -1, runs = 0;
  Int extras = 0;
  for (int i = 0; i < e; ++i) {
    if (c[i] == hi) ++extras;
    if (c[i] == hi && c[reduce_mod(i - 1, e)] == lo) {
      ++runs;
      start = i;
    }
  }
  if (runs != 1) return std::nullopt;
  return PositiveRootForm{start, lo * e + extras};
}

RootClass classify(const RootVector& v) {
  auto form = positive_root_form(v);
  if (!form) return RootClass{RootKind::NotARoot, 0};
  if (form->h % v.e() == 0)
    return RootClass{RootKind::ImaginaryRoot, form->h / v.e()};
  return RootClass{RootKind::RealRoot, 0};
}

bool is_positive_root(const RootVector& v) {
  return classify(v).kind != RootKind::NotARoot;
}

std::optional<PsiDecomposition> psi_m(const RootVector& v) {
  RootClass rc = classify(v);
  if (rc.kind == RootKind::RealRoot) return PsiDecomposition{1, v};
  if (rc.kind == RootKind::ImaginaryRoot)
    return PsiDecomposition{rc.delta_multiple, RootVector::delta(v.e())};
  // Try v == m * beta with beta a real root.  Real roots take exactly two
  // adjacent coefficient values, so m is forced to be their scaled gap.
  if (v.e() < 2 || v.is_zero()) return std::nullopt;
  const auto& c = v.coeffs();
  Int lo = *std::min_element(c.begin(), c.end());
  Int hi = *std::max_element(c.begin(), c.end());
  Int m = hi - lo;
  if (m < 2 || lo % m != 0) return std::nullopt;
  std::vector<Int> base(c);
  for (Int& x : base) {
    if (x % m != 0) return std::nullopt;
    x /= m;
  }
  RootVector beta(v.e(), std::move(base));
  if (classify(beta).kind != RootKind::RealRoot) return std::nullopt;
  return PsiDecomposition{m, beta};
}

std::string root_name(const RootVector& v) {
  if (v.is_zero()) return "0";
  auto pm = psi_m(v);
  if (!pm) {
    // Not a positive-root multiple: plain sum of weighted simple roots.
    std::string out;
    for (int i = 0; i < v.e(); ++i) {
      Int c = v.coeffs()[i];
      if (c == 0) continue;
      if (!out.empty()) out += "+";
      if (c > 1) out += std::to_string(c);
      out += "α" + std::to_string(i);
    }
    return out;
  }
  const Int m = pm->m;
  const RootVector& base = pm->base;
  if (base == RootVector::delta(v.e()))
    return (m == 1 ? "" : std::to_string(m)) + std::string("δ");
  auto form = positive_root_form(base);
  const int e = v.e();
  Int q = form->h / e;
  Int r = form->h % e;
  std::string name;
  if (q >= 1) {
    if (q > 1) name += std::to_string(q);
    name += "δ+";
  }
  for (Int j = 0; j < r; ++j) {
    if (j > 0) name += "+";
    name += "α" + std::to_string(reduce_mod(form->t + j, e));
  }
  if (m == 1) return name;
  if (form->h == 1) return std::to_string(m) + name;
  return std::to_string(m) + "(" + name + ")";
}

// ---------------------------------------------------------------------------
// Kostant partitions

void KostantPartition::add(const RootVector& base, Int mult) {
  require(e_ >= 2, "KostantPartition: construct with e first");
  require(base.e() == e_, "KostantPartition: mixed e");
  require(mult >= 1, "KostantPartition: multiplicity must be positive");
  RootClass rc = classify(base);
  bool in_psi = rc.kind == RootKind::RealRoot ||
                (rc.kind == RootKind::ImaginaryRoot && rc.delta_multiple == 1);
  require(in_psi, "KostantPartition: " + root_name(base) +
                      " is not an indivisible positive root");
  m_[base] += mult;
}

Int KostantPartition::mult(const RootVector& base) const {
  auto it = m_.find(base);
  return it == m_.end() ? 0 : it->second;
}

RootVector KostantPartition::total() const {
  require(e_ >= 2, "KostantPartition: construct with e first");
  RootVector sum = RootVector::zero(e_);
  for (const auto& [root, mult] : m_) sum += root.times(mult);
  return sum;
}

std::vector<std::pair<RootVector, Int>> KostantPartition::sorted_entries(
    const ConvexPreorder& pre) const {
  require(pre.e() == e_ || m_.empty(), "KostantPartition: preorder e mismatch");
  std::vector<std::pair<RootVector, Int>> out(m_.begin(), m_.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    Cmp c = pre.compare(a.first, b.first);
    if (c != Cmp::Equivalent) return c == Cmp::Greater;
    return a.first < b.first;  // unreachable for distinct Psi entries
  });
  return out;
}

std::string KostantPartition::to_string(const ConvexPreorder& pre) const {
  std::string out = "(";
  bool first = true;
  for (const auto& [root, mult] : sorted_entries(pre)) {
    if (!first) out += " | ";
    first = false;
    out += root_name(root);
    if (mult > 1) out += superscript(mult);
  }
  return out + ")";
}

KostantPartition kostant_from_sequence(const std::vector<RootVector>& seq,
                                       const ConvexPreorder& pre) {
  KostantPartition out(pre.e());
  std::optional<RootVector> prev;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    require(seq[i].e() == pre.e(),
            "kostant_from_sequence: entry " + std::to_string(i) +
                " has mismatched e");
    auto pm = psi_m(seq[i]);
    require(pm.has_value(), "kostant_from_sequence: entry " +
                                std::to_string(i) + " (" + root_name(seq[i]) +
                                ") is not a positive-root multiple");
    if (prev)
      require(pre.compare(pm->base, *prev) != Cmp::Greater,
              "kostant_from_sequence: contents not weakly decreasing at "
              "index " +
                  std::to_string(i));
    out.add(pm->base, pm->m);
    prev = pm->base;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Bilexicographic dominance

BilexVerdict bilex_compare(const KostantPartition& a, const KostantPartition& b,
                           const ConvexPreorder& pre) {
  require(a.e() == b.e() || a.empty() || b.empty(),
          "bilex_compare: mixed e");
  if (!a.empty() && !b.empty())
    require(a.total() == b.total(),
            "bilex_compare: partitions have different total content");

  std::vector<RootVector> keys;
  for (const auto& [root, mult] : a.entries()) keys.push_back(root);
  for (const auto& [root, mult] : b.entries())
    if (!a.mult(root)) keys.push_back(root);
  std::sort(keys.begin(), keys.end(),
            [&](const RootVector& x, const RootVector& y) {
              Cmp c = pre.compare(x, y);
              if (c != Cmp::Equivalent) return c == Cmp::Less;
              return x < y;  // unreachable for distinct Psi entries
            });

  BilexVerdict v;
  for (const RootVector& k : keys) {       // upward from the minimal end
    Int am = a.mult(k), bm = b.mult(k);
    if (am != bm) {
      v.right = am > bm ? LexOrder::Greater : LexOrder::Less;
      break;
    }
  }
  for (auto it = keys.rbegin(); it != keys.rend(); ++it) {  // from the top
    Int am = a.mult(*it), bm = b.mult(*it);
    if (am != bm) {
      v.left = am > bm ? LexOrder::Greater : LexOrder::Less;
      break;
    }
  }
  if (v.right == LexOrder::Equal && v.left == LexOrder::Equal)
    v.overall = BilexResult::Equal;
  else if (v.right == LexOrder::Greater && v.left == LexOrder::Greater)
    v.overall = BilexResult::GreaterBoth;
  else if (v.right == LexOrder::Less && v.left == LexOrder::Less)
    v.overall = BilexResult::LessBoth;
  else
    v.overall = BilexResult::Incomparable;
  return v;
}

}  // namespace cusp
