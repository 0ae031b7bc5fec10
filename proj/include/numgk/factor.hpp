#pragma once

#include "numgk/polynomial.hpp"
#include "numgk/roots.hpp"
#include "numgk/spectral.hpp"
#include "numgk/charpoly.hpp"
#include "numgk/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace numgk {

struct IrreducibleFactor {
  IntPolynomial factor;  // primitive, positive leading coefficient
  int multiplicity = 0;
};

namespace detail {

using Complex = std::complex<long double>;

/// All complex roots of a square-free polynomial (Aberth-Ehrlich).
inline std::vector<Complex> numeric_roots(const IntPolynomial& p) {
  const int d = p.degree();
  std::vector<Complex> roots;
  if (d < 1) return roots;
  std::vector<long double> c(static_cast<std::size_t>(d) + 1);
  const long double lead = p.leading().convert_to<long double>();
  for (int i = 0; i <= d; ++i) c[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i)).convert_to<long double>() / lead;
  long double radius = 0;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::pow(std::fabs(c[static_cast<std::size_t>(i)]), 1.0L / (d - i)));
  radius = std::max(radius, 1.0L);
  const long double pi = std::acos(-1.0L);
  for (int k = 0; k < d; ++k) roots.push_back(std::polar(radius, (2 * pi * k + 0.4L) / d));
  auto eval = [&](Complex z, Complex& dz) {
    Complex v = 0;
    dz = 0;
    for (int i = d; i >= 0; --i) {
      dz = dz * z + v;
      v = v * z + c[static_cast<std::size_t>(i)];
    }
    return v;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0;
    for (int k = 0; k < d; ++k) {
      Complex dz;
      Complex v = eval(roots[static_cast<std::size_t>(k)], dz);
      if (v == Complex(0)) continue;
      Complex ratio = v / dz;
      Complex repulsion = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) repulsion += 1.0L / (roots[static_cast<std::size_t>(k)] - roots[static_cast<std::size_t>(j)]);
      Complex step = ratio / (1.0L - ratio * repulsion);
      roots[static_cast<std::size_t>(k)] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(roots[static_cast<std::size_t>(k)])));
    }
    if (worst < 1e-17L) break;
  }
  return roots;
}

/// Splits a square-free primitive polynomial into irreducible factors over
/// Z. Candidate factors come from grouping numerically computed roots;
/// every accepted factor is verified by exact division, and groups are tried
/// in increasing size so each accepted factor is minimal. Polynomials above
/// `max_degree` are returned whole.
inline std::vector<IntPolynomial> factor_squarefree(const IntPolynomial& g, int max_degree = 20) {
  if (g.degree() <= 1 || g.degree() > max_degree) return {g.primitive()};
  // Monic transform F(y) = L^(d-1) g(y / L).
  const int d = g.degree();
  const Integer lead = g.leading();
  std::vector<Integer> fc(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) fc[static_cast<std::size_t>(i)] = g.coeff(static_cast<std::size_t>(i)) * pow(lead, static_cast<unsigned>(d - i)) / lead;
  IntPolynomial rest(fc);
  std::vector<Complex> roots = numeric_roots(rest);
  std::vector<IntPolynomial> monic_factors;

  bool progress = true;
  while (progress && rest.degree() > 1) {
    progress = false;
    const std::size_t m = roots.size();
    for (std::size_t size = 1; size * 2 <= m && !progress; ++size) {
      std::vector<std::size_t> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        std::vector<Complex> poly{1};
        for (std::size_t i : idx) {
          std::vector<Complex> next(poly.size() + 1);
          for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * roots[i];
          }
          poly = std::move(next);
        }
        bool integral = true;
        std::vector<Integer> rounded(poly.size());
        for (std::size_t j = 0; j < poly.size() && integral; ++j) {
          long double re = poly[j].real();
          long double tol = 1e-6L * std::max(1.0L, std::fabs(re));
          if (std::fabs(poly[j].imag()) > tol || std::fabs(re - std::round(re)) > tol) integral = false;
          else rounded[j] = Integer(static_cast<long long>(std::llround(re)));
        }
        if (integral) {
          IntPolynomial candidate(rounded);
          if (divides(candidate, rest)) {
            monic_factors.push_back(candidate);
            rest = exact_quotient(rest, candidate);
            std::vector<Complex> kept;
            for (std::size_t i = 0; i < m; ++i)
              if (std::find(idx.begin(), idx.end(), i) == idx.end()) kept.push_back(roots[i]);
            roots = std::move(kept);
            progress = true;
            break;
          }
        }
        // next combination
        std::size_t pos = size;
        while (pos > 0 && idx[pos - 1] == m - size + pos - 1) --pos;
        if (pos == 0) break;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }
  monic_factors.push_back(rest);

  // Undo the monic transform: a factor H(y) of F gives primitive H(L x).
  std::vector<IntPolynomial> out;
  for (const auto& h : monic_factors) {
    std::vector<Integer> v(h.coefficients().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = h.coeff(i) * pow(lead, static_cast<unsigned>(i));
    out.push_back(IntPolynomial(v).primitive());
  }
  return out;
}

}  // namespace detail

/// Irreducible factorization over Z (content and sign dropped), ordered by
/// degree, then by coefficients.
inline std::vector<IrreducibleFactor> factor(const IntPolynomial& p) {
  std::vector<IrreducibleFactor> out;
  for (const auto& sf : squarefree_decomposition(p))
    for (auto& f : detail::factor_squarefree(sf.factor)) out.push_back({f, sf.multiplicity});
  std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    const auto& ca = a.factor.coefficients();
    const auto& cb = b.factor.coefficients();
    return std::lexicographical_compare(cb.rbegin(), cb.rend(), ca.rbegin(), ca.rend());
  });
  return out;
}

/// The same real number with its minimal polynomial as defining polynomial.
inline RealAlgebraic with_minimal_polynomial(const RealAlgebraic& a) {
  if (a.is_exact()) return a;
  for (const auto& f : factor(a.polynomial())) {
    const IntPolynomial& g = f.factor;
    if (g.sign_at(a.lower()) == 0 || g.sign_at(a.upper()) == 0) continue;  // endpoints are not the root
    if (SturmSequence(g).count(a.lower(), a.upper()) == 1) return RealAlgebraic(RealAlgebraic::Trusted{}, g, a.lower(), a.upper());
  }
  throw std::logic_error("no factor of the defining polynomial isolates the root");
}

/// rho(m) whose defining polynomial is its minimal polynomial. When rho is
/// the absolute value of a real eigenvalue, the matching irreducible factor
/// of the characteristic polynomial (or its reflection) is used; otherwise the
/// defining polynomial is factored directly, which is complete only up to the
/// degree cap of the numeric splitter.
inline RealAlgebraic spectral_radius_minimal(const Matrix& m) {
  RealAlgebraic rho = spectral_radius(m);
  if (rho.is_exact()) return rho;
  for (const auto& f : factor(char_poly(m))) {
    for (const IntPolynomial& h : {f.factor, f.factor.reflected().primitive()}) {
      if (h.degree() < 1 || h.sign_at(rho.lower()) == 0 || h.sign_at(rho.upper()) == 0) continue;
      if (SturmSequence(h).count(rho.lower(), rho.upper()) != 1) continue;
      RealAlgebraic candidate(RealAlgebraic::Trusted{}, h, rho.lower(), rho.upper());
      if (candidate == rho) return candidate;
    }
  }
  return with_minimal_polynomial(rho);
}

namespace detail {

/// |n| = s^2 * t with t square-free.
inline void split_square(Integer n, Integer& s, Integer& t) {
  n = abs_int(n);
  s = 1;
  t = 1;
  for (Integer q = 2; q * q <= n; ++q) {
    while (n % (q * q) == 0) {
      n /= q * q;
      s *= q;
    }
    if (n % q == 0) {
      n /= q;
      t *= q;
    }
  }
  t *= n;
}

}  // namespace detail

namespace detail {

/// Roots of a x^2 + b x + c as (num ± s sqrt(t)) / den, reduced.
struct QuadraticForm {
  Integer num, s, t, den;
  bool complex = false;
};

inline QuadraticForm quadratic_form(const IntPolynomial& f) {
  const Integer a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
  const Integer disc = b * b - 4 * a * c;
  QuadraticForm q;
  split_square(disc, q.s, q.t);
  q.num = -b;
  q.den = 2 * a;
  Integer g = gcd(gcd(q.num, q.s), q.den);
  q.num /= g;
  q.s /= g;
  q.den /= g;
  q.complex = disc < 0;
  return q;
}

inline std::string radical(const QuadraticForm& q) {
  std::string r = (q.s == 1 ? std::string() : q.s.str()) + (q.t == 1 ? std::string() : "√" + q.t.str());
  if (q.complex) return r + "i";
  return r.empty() ? "1" : r;
}

inline std::string over(const std::string& body, const Integer& den) {
  return den == 1 ? body : "(" + body + ")/" + den.str();
}

}  // namespace detail

/// Human-readable roots of an irreducible factor: closed forms up to degree
/// two, named cyclotomic cases, otherwise "roots of <poly>".
inline std::string root_label(const IntPolynomial& f) {
  if (f.degree() == 1) return to_string(Scalar(Integer(-f.coeff(0)), f.coeff(1)));
  if (f == IntPolynomial{1, 1, 1}) return "ω, ω²";
  if (f == IntPolynomial{1, -1, 1}) return "-ω, -ω²";
  if (f == IntPolynomial{1, 0, 1}) return "±i";
  if (f.degree() != 2) return "roots of " + f.to_string();
  const detail::QuadraticForm q = detail::quadratic_form(f);
  const std::string r = detail::radical(q);
  return detail::over(q.num == 0 ? "±" + r : q.num.str() + " ± " + r, q.den);
}

/// Closed form of one real algebraic number: a rational, a quadratic
/// surd such as "7 + 4√3", or "root of <poly>" beyond degree two.
inline std::string real_root_label(const RealAlgebraic& x) {
  if (x.is_exact()) return to_string(x.lower());
  const IntPolynomial& f = x.polynomial();
  if (f.degree() != 2) return "root of " + f.to_string();
  const detail::QuadraticForm q = detail::quadratic_form(f);
  const bool upper = x.compare(Scalar(q.num, q.den)) > 0;
  std::string r = detail::radical(q);
  if (r == "1") r.clear();
  std::string body;
  if (q.num == 0) body = (upper ? "" : "-") + (r.empty() ? "1" : r);
  else body = q.num.str() + (upper ? " + " : " - ") + (r.empty() ? "1" : r);
  return detail::over(body, q.den);
}

}  // namespace numgk
