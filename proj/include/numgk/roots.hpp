#pragma once

#include "numgk/polynomial.hpp"
#include "numgk/scalar.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace numgk {

/// Sturm chain of a square-free polynomial, built with sign-corrected
/// primitive pseudo-remainders so only positive factors are dropped.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& squarefree) {
    if (squarefree.is_zero()) throw std::domain_error("undefined root count");
    chain_.push_back(squarefree.primitive());
    if (squarefree.degree() <= 0) return;
    chain_.push_back(squarefree.derivative().primitive());
    while (chain_.back().degree() > 0) {
      const IntPolynomial& a = chain_[chain_.size() - 2];
      const IntPolynomial& b = chain_.back();
      IntPolynomial r = pseudo_remainder(a, b);
      if (r.is_zero()) break;
      // prem multiplies by lc(b)^(da-db+1); undo its sign, then negate.
      int delta = a.degree() - b.degree() + 1;
      bool flip = b.leading() < 0 && (delta % 2 == 1);
      Integer g = r.content();
      r = r.scaled(flip ? Integer(1) : Integer(-1));
      std::vector<Integer> v = r.coefficients();
      for (auto& c : v) c /= g;
      chain_.emplace_back(std::move(v));
    }
  }

  const std::vector<IntPolynomial>& chain() const { return chain_; }

  int variations_at(const Scalar& x) const {
    return count_variations([&](const IntPolynomial& p) { return p.sign_at(x); });
  }

  int variations_at_infinity(bool positive) const {
    return count_variations([&](const IntPolynomial& p) { return p.sign_at_infinity(positive); });
  }

  /// Distinct roots in (lo, hi].
  int count(const Scalar& lo, const Scalar& hi) const { return variations_at(lo) - variations_at(hi); }

  int count_all() const { return variations_at_infinity(false) - variations_at_infinity(true); }

 private:
  int count_variations(const std::function<int(const IntPolynomial&)>& sign_of) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : chain_) {
      int s = sign_of(p);
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots of p in (lo, hi].
inline int sturm_root_count(const IntPolynomial& p, const Scalar& lo, const Scalar& hi) {
  if (p.is_zero()) throw std::domain_error("undefined root count");
  if (!(lo < hi)) throw std::invalid_argument("sturm_root_count requires lo < hi");
  IntPolynomial g = squarefree_part(p);
  if (g.degree() <= 0) return 0;
  return SturmSequence(g).count(lo, hi);
}

/// Integer strictly greater than the modulus of every complex root
/// (Cauchy bound).
inline Integer root_bound(const IntPolynomial& p) {
  if (p.degree() <= 0) return 1;
  Integer lead = abs_int(p.leading());
  Integer worst = 0;
  for (int i = 0; i < p.degree(); ++i) worst = std::max(worst, abs_int(p.coeff(static_cast<std::size_t>(i))));
  return ceil(Scalar(worst, lead)) + 2;
}

/// A real algebraic number: a square-free primitive polynomial and a
/// closed rational interval containing exactly one of its real roots.
/// Either lo == hi (the root is that rational), or neither endpoint is a
/// root and the polynomial changes sign across the interval.
class RealAlgebraic {
 public:
  RealAlgebraic() : RealAlgebraic(Scalar(0)) {}

  explicit RealAlgebraic(const Scalar& value)
      : poly_(IntPolynomial({Integer(-numerator(value)), denominator(value)})), lo_(value), hi_(value) {}

  /// Verifies the isolation invariant; throws std::invalid_argument if the
  /// interval does not hold exactly one root of p.
  RealAlgebraic(const IntPolynomial& p, const Scalar& lo, const Scalar& hi) : lo_(lo), hi_(hi) {
    if (p.is_zero()) throw std::invalid_argument("defining polynomial is zero");
    if (hi < lo) throw std::invalid_argument("enclosure interval is reversed");
    poly_ = squarefree_part(p);
    if (lo == hi) {
      if (poly_.sign_at(lo) != 0) throw std::invalid_argument("point enclosure is not a root");
      poly_ = IntPolynomial({Integer(-numerator(lo)), denominator(lo)});
      return;
    }
    SturmSequence s(poly_);
    int inside = s.count(lo, hi) + (poly_.sign_at(lo) == 0 ? 1 : 0);
    if (inside != 1) throw std::invalid_argument("interval does not isolate exactly one root");
    normalize_endpoints();
  }

  struct Trusted {};
  /// Caller guarantees p is square-free and primitive and the interval
  /// satisfies the class invariant.
  RealAlgebraic(Trusted, IntPolynomial p, Scalar lo, Scalar hi)
      : poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ == hi_) poly_ = IntPolynomial({Integer(-numerator(lo_)), denominator(lo_)});
  }

  const IntPolynomial& polynomial() const { return poly_; }
  const Scalar& lower() const { return lo_; }
  const Scalar& upper() const { return hi_; }
  Scalar width() const { return hi_ - lo_; }
  bool is_exact() const { return lo_ == hi_; }

  /// Exact value if the root is rational and has been collapsed.
  const Scalar* exact_value() const { return is_exact() ? &lo_ : nullptr; }

  /// Same root, interval width <= width, by bisection on exact signs.
  RealAlgebraic refine(const Scalar& width) const {
    if (!(width > 0)) throw std::invalid_argument("refine width must be positive");
    RealAlgebraic r = *this;
    while (!r.is_exact() && r.width() > width) r.bisect();
    return r;
  }

  /// sign(value - q), exact.
  int compare(const Scalar& q) const {
    if (q < lo_) return 1;
    if (q > hi_) return -1;
    if (is_exact()) return 0;
    int sq = poly_.sign_at(q);
    if (sq == 0) return 0;
    return sq == poly_.sign_at(lo_) ? 1 : -1;
  }

  bool contains(const Scalar& q) const { return lo_ <= q && q <= hi_; }

  /// Collapses the interval to a point when the root is rational. Any
  /// rational root of a primitive integer polynomial is a multiple of
  /// 1/lc, so once the width drops below 1/lc at most one candidate
  /// remains.
  RealAlgebraic collapse_if_rational() const {
    if (is_exact()) return *this;
    const Integer lead = abs_int(poly_.leading());
    RealAlgebraic r = refine(Scalar(1, lead + 1));
    if (r.is_exact()) return r;
    Scalar candidate(ceil(r.lo_ * Scalar(lead)), lead);
    if (candidate <= r.hi_ && r.poly_.sign_at(candidate) == 0) return RealAlgebraic(candidate);
    return r;
  }

  /// Rounded to `digits` decimals; refines until the rounding is certain.
  std::string decimal(unsigned digits) const {
    if (is_exact()) return to_decimal(lo_, digits);
    RealAlgebraic r = *this;
    Scalar tol = Scalar(1, pow(Integer(10), digits + 1));
    r = r.refine(tol);
    while (!r.is_exact() && to_decimal(r.lo_, digits) != to_decimal(r.hi_, digits)) r.bisect();
    return to_decimal(r.lo_, digits);
  }

  long double approx() const {
    RealAlgebraic r = refine(Scalar(1, Integer(1) << 70));
    Scalar mid = (r.lo_ + r.hi_) / 2;
    return numerator(mid).convert_to<long double>() / denominator(mid).convert_to<long double>();
  }

  friend bool operator==(const RealAlgebraic& a, const RealAlgebraic& b);

 private:
  void bisect() {
    Scalar mid = (lo_ + hi_) / 2;
    int sm = poly_.sign_at(mid);
    if (sm == 0) {
      *this = RealAlgebraic(mid);
      return;
    }
    if (sm == poly_.sign_at(lo_))
      lo_ = mid;
    else
      hi_ = mid;
  }

  // Exactly one root lies in [lo, hi]; if it sits on an endpoint the
  // enclosure becomes a point.
  void normalize_endpoints() {
    if (poly_.sign_at(lo_) == 0)
      *this = RealAlgebraic(lo_);
    else if (poly_.sign_at(hi_) == 0)
      *this = RealAlgebraic(hi_);
  }

  IntPolynomial poly_;
  Scalar lo_;
  Scalar hi_;
};

/// Exact equality of two real algebraic numbers: they are equal iff the gcd
/// of their defining polynomials has a root in the intersection of the
/// isolating intervals.
inline bool operator==(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.is_exact()) return b.compare(a.lo_) == 0;
  if (b.is_exact()) return a.compare(b.lo_) == 0;
  Scalar lo = std::max(a.lo_, b.lo_);
  Scalar hi = std::min(a.hi_, b.hi_);
  if (hi < lo) return false;
  IntPolynomial h = gcd(a.poly_, b.poly_);
  if (h.degree() <= 0) return false;
  if (h.sign_at(lo) == 0) return true;
  if (lo == hi) return false;
  return SturmSequence(h).count(lo, hi) > 0;
}

/// sign(a - b), exact.
inline int compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a == b) return 0;
  RealAlgebraic x = a;
  RealAlgebraic y = b;
  Scalar w = std::max(x.width(), y.width());
  while (!(x.upper() < y.lower()) && !(y.upper() < x.lower())) {
    w /= 2;
    x = x.refine(w);
    y = y.refine(w);
  }
  return x.upper() < y.lower() ? -1 : 1;
}

inline RealAlgebraic refine(const RealAlgebraic& e, const Scalar& width) { return e.refine(width); }

/// One enclosure per distinct real root, ascending, pairwise disjoint.
/// Rational roots are returned as point intervals.
inline std::vector<RealAlgebraic> isolate_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
  IntPolynomial g = squarefree_part(p);
  std::vector<RealAlgebraic> out;
  if (g.degree() <= 0) return out;
  const SturmSequence s(g);
  const Scalar bound(root_bound(g));

  struct Interval {
    Scalar lo, hi;
  };
  std::vector<std::pair<Scalar, Scalar>> found;  // closed intervals, lo == hi for exact roots
  std::vector<Interval> stack{{-bound, bound}};
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    int n = s.count(iv.lo, iv.hi);
    if (n == 0) continue;
    if (n == 1) {
      found.emplace_back(iv.lo, iv.hi);
      continue;
    }
    Scalar mid = (iv.lo + iv.hi) / 2;
    if (g.sign_at(mid) != 0) {
      stack.push_back({iv.lo, mid});
      stack.push_back({mid, iv.hi});
      continue;
    }
    found.emplace_back(mid, mid);
    Scalar delta = (mid - iv.lo) / 2;
    while (g.sign_at(mid - delta) == 0 || s.count(mid - delta, mid) != 1 || g.sign_at(mid + delta) == 0 ||
           s.count(mid, mid + delta) != 0)
      delta /= 2;
    stack.push_back({iv.lo, mid - delta});
    stack.push_back({mid + delta, iv.hi});
  }
  std::sort(found.begin(), found.end());
  for (std::size_t i = 0; i + 1 < found.size(); ++i) {
    // Shrink the left interval away from a shared endpoint.
    while (found[i].second == found[i + 1].first && found[i].first != found[i].second) {
      Scalar mid = (found[i].first + found[i].second) / 2;
      if (g.sign_at(mid) == 0) {
        found[i] = {mid, mid};
      } else if (g.sign_at(mid) == g.sign_at(found[i].first)) {
        found[i].first = mid;
      } else {
        found[i].second = mid;
      }
    }
  }
  out.reserve(found.size());
  for (const auto& [lo, hi] : found)
    out.push_back(RealAlgebraic(RealAlgebraic::Trusted{}, g, lo, hi).collapse_if_rational());
  return out;
}

}  // namespace numgk
