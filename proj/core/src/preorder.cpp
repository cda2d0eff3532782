#include "cuspidal/preorder.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cusp {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

struct Weight {
  __int128 x = 0, y = 0;
};

Weight weigh(const RootVector& v, const std::vector<std::array<Int, 2>>& h) {
  Weight w;
  for (int i = 0; i < v.e(); ++i) {
    w.x += static_cast<__int128>(v.coeffs()[i]) * h[i][0];
    w.y += static_cast<__int128>(v.coeffs()[i]) * h[i][1];
  }
  return w;
}

}  // namespace

ConvexPreorder ConvexPreorder::functional(int e,
                                          std::vector<std::array<Int, 2>> h) {
  require(e >= 2, "ConvexPreorder: e must be at least 2");
  require(static_cast<int>(h.size()) == e,
          "ConvexPreorder: expected one weight pair per residue");
  ConvexPreorder p;
  p.e_ = e;
  p.h_ = std::move(h);
  return p;
}

ConvexPreorder ConvexPreorder::preset(const std::string& name) {
  ConvexPreorder p;
  if (name == "bigex") {
    p = functional(3, {{{2, 1}, {-1, 0}, {-1, -1}}});
  } else if (name == "e2-standard") {
    p = functional(2, {{{-1, 0}, {1, 0}}});
  } else {
    throw std::invalid_argument("ConvexPreorder: unknown preset \"" + name +
                                "\"");
  }
  p.preset_ = name;
  return p;
}

ConvexPreorder ConvexPreorder::reversed() const {
  ConvexPreorder p = *this;
  p.reversed_ = !p.reversed_;
  return p;
}

std::string ConvexPreorder::key() const {
  std::ostringstream os;
  os << "e=" << e_ << ";h=";
  for (int i = 0; i < e_; ++i) {
    if (i) os << ';';
    os << h_[i][0] << ',' << h_[i][1];
  }
  os << ";rev=" << (reversed_ ? 1 : 0);
  return os.str();
}

std::string ConvexPreorder::describe() const {
  std::string core;
  if (!preset_.empty()) {
    core = preset_;
  } else {
    std::ostringstream os;
    os << "functional(e=" << e_ << ", h=[";
    for (int i = 0; i < e_; ++i) {
      if (i) os << ",";
      os << "(" << h_[i][0] << "," << h_[i][1] << ")";
    }
    os << "])";
    core = os.str();
  }
  return reversed_ ? "reverse(" + core + ")" : core;
}

Cmp ConvexPreorder::compare(const RootVector& beta,
                            const RootVector& gamma) const {
  require(e_ >= 2, "ConvexPreorder: uninitialized");
  require(beta.e() == e_ && gamma.e() == e_,
          "ConvexPreorder: root e does not match preorder e");
  require(is_positive_root(beta),
          "ConvexPreorder: left argument " + root_name(beta) +
              " is not a positive root");
  require(is_positive_root(gamma),
          "ConvexPreorder: right argument " + root_name(gamma) +
              " is not a positive root");
  // Compare weight(beta)/height(beta) against weight(gamma)/height(gamma)
  // lexicographically, by exact cross-multiplication.
  Weight wb = weigh(beta, h_), wg = weigh(gamma, h_);
  __int128 hb = beta.height(), hg = gamma.height();
  __int128 lhs = wb.x * hg, rhs = wg.x * hb;
  if (lhs == rhs) {
    lhs = wb.y * hg;
    rhs = wg.y * hb;
  }
  if (lhs == rhs) return Cmp::Equivalent;
  bool greater = lhs > rhs;
  if (reversed_) greater = !greater;
  return greater ? Cmp::Greater : Cmp::Less;
}

bool operator==(const ConvexPreorder& a, const ConvexPreorder& b) {
  return a.e_ == b.e_ && a.h_ == b.h_ && a.reversed_ == b.reversed_;
}

// ---------------------------------------------------------------------------
// Axiom verification

namespace {

std::vector<RootVector> positive_roots_up_to(int e, Int height_bound) {
  std::vector<RootVector> out;
  for (Int h = 1; h <= height_bound; ++h) {
    if (h % e == 0) {
      out.push_back(RootVector::delta(e).times(h / e));
    } else {
      for (int t = 0; t < e; ++t) out.push_back(alpha(e, t, h));
    }
  }
  return out;
}

}  // namespace

AxiomReport verify_axioms(const ConvexPreorder& pre, Int height_bound) {
  AxiomReport report;
  report.height_bound = height_bound;
  constexpr std::size_t kMaxViolations = 50;
  auto flag = [&](const std::string& axiom, const std::string& witness) {
    if (report.violations.size() < kMaxViolations)
      report.violations.push_back({axiom, witness});
  };

  const std::vector<RootVector> roots =
      positive_roots_up_to(pre.e(), height_bound);
  const int n = static_cast<int>(roots.size());
  auto imaginary = [&](const RootVector& v) {
    return classify(v).kind == RootKind::ImaginaryRoot;
  };

  // Reflexivity.
  for (const RootVector& b : roots) {
    ++report.cases_checked;
    if (pre.compare(b, b) != Cmp::Equivalent)
      flag("reflexivity", root_name(b));
  }

  // Pairwise: totality mirror, equivalence separation, imaginary class.
  std::vector<std::vector<Cmp>> cmp(n, std::vector<Cmp>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cmp[i][j] = pre.compare(roots[i], roots[j]);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ++report.cases_checked;
      Cmp ab = cmp[i][j], ba = cmp[j][i];
      bool mirrored = (ab == Cmp::Equivalent && ba == Cmp::Equivalent) ||
                      (ab == Cmp::Greater && ba == Cmp::Less) ||
                      (ab == Cmp::Less && ba == Cmp::Greater);
      if (!mirrored)
        flag("totality", root_name(roots[i]) + " vs " + root_name(roots[j]));
      if (ab == Cmp::Equivalent && roots[i] != roots[j] &&
          !(imaginary(roots[i]) && imaginary(roots[j])))
        flag("equivalence-separation",
             root_name(roots[i]) + " ~ " + root_name(roots[j]));
      if (imaginary(roots[i]) && imaginary(roots[j]) && ab != Cmp::Equivalent)
        flag("imaginary-equivalence",
             root_name(roots[i]) + " vs " + root_name(roots[j]));
    }
  }

  // Transitivity over ordered triples.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ++report.cases_checked;
        if (cmp[i][j] != Cmp::Less && cmp[j][k] != Cmp::Less &&
            cmp[i][k] == Cmp::Less)
          flag("transitivity", root_name(roots[i]) + " >= " +
                                   root_name(roots[j]) + " >= " +
                                   root_name(roots[k]));
      }

  // Convexity: beta >= gamma implies beta >= beta+gamma >= gamma whenever
  // the sum is a root.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RootVector sum = roots[i] + roots[j];
      if (!is_positive_root(sum)) continue;
      ++report.cases_checked;
      if (cmp[i][j] != Cmp::Less) {
        if (pre.compare(roots[i], sum) == Cmp::Less ||
            pre.compare(sum, roots[j]) == Cmp::Less)
          flag("convexity", root_name(roots[i]) + " >= " +
                                root_name(roots[j]) + " but not >= " +
                                root_name(sum) + " >= ");
      }
    }

  return report;
}

// ---------------------------------------------------------------------------
// Decomposition relative to a pivot

Decomposer::Decomposer(const ConvexPreorder& pre, RootVector pivot,
                       Direction dir, Strictness strictness)
    : pre_(pre), pivot_(std::move(pivot)), dir_(dir), strictness_(strictness) {
  require(pivot_.e() == pre.e(), "Decomposer: pivot e mismatch");
  require(is_positive_root(pivot_),
          "Decomposer: pivot " + root_name(pivot_) + " is not a positive root");
}

bool Decomposer::admissible(const RootVector& part) const {
  Cmp c = pre_.compare(part, pivot_);
  if (dir_ == Direction::Below)
    return strictness_ == Strictness::Strict ? c == Cmp::Less
                                             : c != Cmp::Greater;
  return strictness_ == Strictness::Strict ? c == Cmp::Greater
                                           : c != Cmp::Less;
}

bool Decomposer::decomposes(const RootVector& theta) {
  require(theta.e() == pre_.e(), "Decomposer: theta e mismatch");
  if (theta.is_zero()) return false;

  auto it = memo_.find(theta);
  if (it != memo_.end()) return it->second;
  memo_.emplace(theta, false);  // guard against re-entry; overwritten below

  const int e = theta.e();
  bool ok = false;
  // Candidate parts: admissible real roots fitting under theta, tallest
  // first, plus delta (multiples of delta are equivalent to delta, so delta
  // alone suffices for completeness).
  for (Int h = theta.height(); h >= 1 && !ok; --h) {
    if (h % e == 0) continue;
    for (int t = 0; t < e && !ok; ++t) {
      RootVector part = alpha(e, t, h);
      auto rest = theta.minus(part);
      if (!rest || !admissible(part)) continue;
      if (rest->is_zero() || decomposes(*rest)) ok = true;
    }
  }
  if (!ok && theta.height() >= e) {
    RootVector d = RootVector::delta(e);
    auto rest = theta.minus(d);
    if (rest && admissible(d) && (rest->is_zero() || decomposes(*rest)))
      ok = true;
  }
  memo_[theta] = ok;
  return ok;
}

bool decomposes(const RootVector& theta, const RootVector& pivot,
                Direction dir, Strictness strictness,
                const ConvexPreorder& pre) {
  Decomposer d(pre, pivot, dir, strictness);
  return d.decomposes(theta);
}

}  // namespace cusp
