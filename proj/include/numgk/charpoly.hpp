#pragma once

#include "numgk/matrix.hpp"
#include "numgk/polynomial.hpp"

#include <vector>

namespace numgk {

/// Coefficients of det(x*I - m) over Q, lowest degree first (monic).
/// Faddeev-LeVerrier recursion; exact since every division is by an
/// integer k <= n.
inline std::vector<Scalar> char_poly_rational(const Matrix& m) {
  const std::size_t n = m.dimension();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix acc = Matrix::zero(n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    Matrix am = m * acc;
    Scalar trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<long long>(k);
  }
  return c;
}

/// det(x*I - m) with denominators cleared: a positive rational multiple of
/// the characteristic polynomial with coprime integer coefficients. Monic
/// for integer matrices.
inline IntPolynomial char_poly(const Matrix& m) { return IntPolynomial::from_rational(char_poly_rational(m)); }

}  // namespace numgk
