#pragma once

#include "numgk/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace numgk {

/// Univariate polynomial with integer coefficients, lowest degree first.
/// Trailing zero coefficients are never stored, so the zero polynomial
/// has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
  IntPolynomial(std::initializer_list<long long> coefficients) {
    for (long long c : coefficients) coeffs_.emplace_back(c);
    trim();
  }

  static IntPolynomial monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }

  /// Builds the primitive integer polynomial proportional to rational
  /// coefficients (positive leading coefficient).
  static IntPolynomial from_rational(const std::vector<Scalar>& coefficients) {
    Integer common = 1;
    for (const auto& q : coefficients) common = lcm(common, denominator(q));
    std::vector<Integer> v;
    v.reserve(coefficients.size());
    for (const auto& q : coefficients) v.push_back(numerator(q) * (common / denominator(q)));
    return IntPolynomial(std::move(v)).primitive();
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  const Integer& leading() const {
    if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  Scalar evaluate(const Scalar& x) const {
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Scalar(*it);
    return acc;
  }

  /// Exact sign at a rational point, computed on the homogenized numerator
  /// so no rational arithmetic is needed.
  int sign_at(const Scalar& x) const {
    if (coeffs_.empty()) return 0;
    const Integer p = numerator(x);
    const Integer q = denominator(x);
    Integer acc = 0;
    Integer qpow = 1;
    // sum a_i p^i q^(d-i) by Horner in p with powers of q folded in.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * p + *it * qpow;
      qpow *= q;
    }
    return acc.sign();
  }

  int sign_at_infinity(bool positive) const {
    if (coeffs_.empty()) return 0;
    int s = leading().sign();
    if (!positive && degree() % 2 == 1) s = -s;
    return s;
  }

  long double evaluate_approx(long double x) const {
    long double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->convert_to<long double>();
    return acc;
  }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long long>(i);
    return IntPolynomial(std::move(d));
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
  }

  /// Content divided out, leading coefficient made positive.
  IntPolynomial primitive() const {
    if (coeffs_.empty()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> v = coeffs_;
    for (auto& c : v) c /= g;
    return IntPolynomial(std::move(v));
  }

  IntPolynomial scaled(const Integer& s) const {
    std::vector<Integer> v = coeffs_;
    for (auto& c : v) c *= s;
    return IntPolynomial(std::move(v));
  }

  /// p(-x)
  IntPolynomial reflected() const {
    std::vector<Integer> v = coeffs_;
    for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return IntPolynomial(std::move(v));
  }

  /// p(x^k)
  IntPolynomial substitute_power(std::size_t k) const {
    if (coeffs_.empty()) return {};
    std::vector<Integer> v(k * (coeffs_.size() - 1) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i * k] = coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  /// Divides out the largest power of x.
  IntPolynomial without_zero_roots(std::size_t* removed = nullptr) const {
    std::size_t z = 0;
    while (z < coeffs_.size() && coeffs_[z] == 0) ++z;
    if (removed != nullptr) *removed = z;
    return IntPolynomial(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(z), coeffs_.end()));
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return IntPolynomial(std::move(v));
  }

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
  }

  IntPolynomial pow(unsigned e) const {
    IntPolynomial result{1};
    IntPolynomial base = *this;
    while (e != 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
  friend IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("pseudo-division by zero polynomial");
    if (a.degree() < b.degree()) return a;
    std::vector<Integer> r = a.coeffs_;
    const Integer& lb = b.leading();
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
      Integer top = r[static_cast<std::size_t>(k)];
      for (auto& c : r) c *= lb;
      if (top == 0) continue;
      for (int j = 0; j <= db; ++j)
        r[static_cast<std::size_t>(k - db + j)] -= top * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return IntPolynomial(std::move(r));
  }

  /// Division over the rationals; returns {quotient, remainder}.
  friend std::pair<std::vector<Scalar>, std::vector<Scalar>> divide_rational(const IntPolynomial& a,
                                                                             const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    std::vector<Scalar> r(a.coeffs_.begin(), a.coeffs_.end());
    if (a.degree() < b.degree()) return {{}, r};
    std::vector<Scalar> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Scalar lb(b.leading());
    const int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
      Scalar factor = r[static_cast<std::size_t>(k)] / lb;
      q[static_cast<std::size_t>(k - db)] = factor;
      if (factor == 0) continue;
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= factor * Scalar(b.coeffs_[static_cast<std::size_t>(j)]);
    }
    r.resize(static_cast<std::size_t>(db));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return {q, r};
  }

  /// Exact quotient a / b when b divides a over the integers; throws
  /// otherwise.
  friend IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    auto [q, r] = divide_rational(a, b);
    if (!r.empty()) throw std::domain_error("polynomial division is not exact");
    std::vector<Integer> v;
    v.reserve(q.size());
    for (const auto& c : q) {
      if (denominator(c) != 1) throw std::domain_error("polynomial quotient is not integral");
      v.push_back(numerator(c));
    }
    return IntPolynomial(std::move(v));
  }

  friend bool divides(const IntPolynomial& b, const IntPolynomial& a) {
    return divide_rational(a, b).second.empty();
  }

  /// "x^2 + 14*x + 1"
  std::string to_string(const std::string& var = "x") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const Integer& c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      Integer mag = abs_int(c);
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (i == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

/// Primitive gcd with positive leading coefficient (primitive PRS).
inline IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  a = a.primitive();
  b = b.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPolynomial r = pseudo_remainder(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

/// p / gcd(p, p'), primitive. Roots are the distinct roots of p.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("square-free part of zero polynomial");
  if (p.degree() <= 0) return IntPolynomial{1};
  IntPolynomial g = gcd(p, p.derivative());
  return exact_quotient(p.primitive(), g).primitive();
}

struct SquarefreeFactor {
  IntPolynomial factor;
  int multiplicity = 0;
};

namespace detail {

using RationalCoeffs = std::vector<Scalar>;

inline void trim(RationalCoeffs& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

inline RationalCoeffs to_rational(const IntPolynomial& p) {
  return RationalCoeffs(p.coefficients().begin(), p.coefficients().end());
}

inline RationalCoeffs derivative(const RationalCoeffs& p) {
  RationalCoeffs d(p.empty() ? 0 : p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<long long>(k);
  trim(d);
  return d;
}

inline RationalCoeffs subtract(const RationalCoeffs& a, const RationalCoeffs& b) {
  RationalCoeffs d(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < d.size(); ++k)
    d[k] = (k < a.size() ? a[k] : Scalar(0)) - (k < b.size() ? b[k] : Scalar(0));
  trim(d);
  return d;
}

/// Quotient of an exact division over Q.
inline RationalCoeffs divide(const RationalCoeffs& a, const RationalCoeffs& b) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.size() < b.size()) return {};
  RationalCoeffs r = a;
  RationalCoeffs q(a.size() - b.size() + 1);
  for (std::size_t k = a.size(); k-- > b.size() - 1;) {
    Scalar factor = r[k] / b.back();
    q[k - (b.size() - 1)] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k - (b.size() - 1) + j] -= factor * b[j];
  }
  trim(q);
  return q;
}

inline RationalCoeffs monic(const IntPolynomial& p) {
  RationalCoeffs v = to_rational(p);
  if (v.empty()) return v;
  Scalar lc = v.back();
  for (auto& x : v) x /= lc;
  return v;
}

}  // namespace detail

/// Yun's algorithm: p = c * prod factor_i^multiplicity_i with the factors
/// primitive, square-free, pairwise coprime and nonconstant. Ordered by
/// increasing multiplicity.
inline std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p) {
  using namespace detail;
  if (p.is_zero()) throw std::domain_error("square-free decomposition of zero polynomial");
  std::vector<SquarefreeFactor> out;
  if (p.degree() <= 0) return out;
  RationalCoeffs f = to_rational(p);
  RationalCoeffs fp = derivative(f);
  RationalCoeffs a = monic(gcd(p, p.derivative()));
  RationalCoeffs b = divide(f, a);
  RationalCoeffs c = divide(fp, a);
  RationalCoeffs d = subtract(c, derivative(b));
  for (int i = 1; b.size() > 1; ++i) {
    IntPolynomial bi = IntPolynomial::from_rational(b);
    IntPolynomial di = d.empty() ? IntPolynomial{} : IntPolynomial::from_rational(d);
    IntPolynomial ai = gcd(bi, di);
    RationalCoeffs am = monic(ai);
    if (ai.degree() > 0) out.push_back({ai, i});
    b = divide(b, am);
    c = divide(d, am);
    d = subtract(c, derivative(b));
  }
  return out;
}

}  // namespace numgk
