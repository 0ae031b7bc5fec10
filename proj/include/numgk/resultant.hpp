#pragma once

#include "numgk/polynomial.hpp"
#include "numgk/scalar.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace numgk {

namespace detail {

/// Fraction-free (Bareiss) determinant of an integer matrix, row-major.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

/// Newton interpolation through (x_i, y_i); returns monomial coefficients.
inline std::vector<Scalar> interpolate(const std::vector<Scalar>& xs, std::vector<Scalar> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Scalar> coeffs(n);
  for (std::size_t i = n; i-- > 0;) {
    // coeffs = coeffs * (x - xs[i]) + ys[i]
    for (std::size_t j = n - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - xs[i] * coeffs[j];
    coeffs[0] = ys[i] - xs[i] * coeffs[0];
  }
  return coeffs;
}

/// Integer polynomial of known degree bound from exact evaluations at
/// 0, 1, ..., degree.
inline IntPolynomial interpolate_integer(std::size_t degree, const std::function<Integer(long long)>& value_at) {
  std::vector<Scalar> xs(degree + 1);
  std::vector<Scalar> ys(degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) {
    xs[i] = static_cast<long long>(i);
    ys[i] = Scalar(value_at(static_cast<long long>(i)));
  }
  std::vector<Scalar> c = interpolate(xs, ys);
  std::vector<Integer> out;
  out.reserve(c.size());
  for (const auto& q : c) {
    if (denominator(q) != 1) throw std::logic_error("interpolated resultant is not integral");
    out.push_back(numerator(q));
  }
  return IntPolynomial(std::move(out));
}

}  // namespace detail

/// Sylvester resultant Res(a, b) with b taken at formal degree
/// `b_degree` (leading zeros allowed). Requires a nonconstant or b
/// nontrivial.
inline Integer resultant(const IntPolynomial& a, const std::vector<Integer>& b_coeffs, std::size_t b_degree) {
  if (a.is_zero()) throw std::domain_error("resultant with zero polynomial");
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = b_degree;
  const std::size_t size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Integer>> syl(size, std::vector<Integer>(size));
  // Rows 0..n-1: shifts of a (highest coefficient first); rows n..: shifts of b.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = a.coeff(m - i);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) syl[n + r][r + i] = n - i < b_coeffs.size() ? b_coeffs[n - i] : Integer(0);
  return detail::bareiss_determinant(std::move(syl));
}

inline Integer resultant(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("resultant with zero polynomial");
  return resultant(a, b.coefficients(), static_cast<std::size_t>(b.degree()));
}

/// r(z) = Res_x(p(x), x^d p(z/x)), d = deg p. Its roots are the d^2
/// products lambda_i * lambda_j of roots of p, so its largest real root is
/// the squared maximal root modulus of p.
inline IntPolynomial modulus_squared_poly(const IntPolynomial& p) {
  if (p.degree() < 1) throw std::domain_error("modulus_squared_poly requires a nonconstant polynomial");
  const std::size_t d = static_cast<std::size_t>(p.degree());
  return detail::interpolate_integer(d * d, [&](long long z) {
    // x^d p(z/x) = sum_i a_i z^i x^(d-i)
    std::vector<Integer> q(d + 1);
    Integer zpow = 1;
    for (std::size_t i = 0; i <= d; ++i) {
      q[d - i] = p.coeff(i) * zpow;
      zpow *= z;
    }
    return resultant(p, q, d);
  });
}

/// Res_y(p(y), x - y^k): its roots are the k-th powers of the roots of p.
inline IntPolynomial power_poly(const IntPolynomial& p, unsigned k) {
  if (p.degree() < 1) throw std::domain_error("power_poly requires a nonconstant polynomial");
  if (k == 0) throw std::invalid_argument("power_poly requires k >= 1");
  const std::size_t d = static_cast<std::size_t>(p.degree());
  return detail::interpolate_integer(d, [&](long long x) {
    std::vector<Integer> q(k + 1);
    q[0] = x;
    q[k] = -1;
    return resultant(p, q, k);
  });
}

}  // namespace numgk
