#pragma once

#include "numgk/matrix.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace numgk {

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline bool is_symmetric(const Matrix& g) {
  if (!g.is_square()) return false;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = i + 1; j < g.cols(); ++j)
      if (g(i, j) != g(j, i)) return false;
  return true;
}

/// Inertia of a symmetric rational form by congruence diagonalization.
inline Signature signature(Matrix g) {
  if (!is_symmetric(g)) throw std::invalid_argument("signature requires a symmetric matrix");
  const std::size_t n = g.rows();
  auto add_to = [&](std::size_t target, std::size_t source, const Scalar& c) {
    // e_target += c * e_source, applied on both sides.
    for (std::size_t j = 0; j < n; ++j) g(target, j) += c * g(source, j);
    for (std::size_t i = 0; i < n; ++i) g(i, target) += c * g(i, source);
  };
  auto swap_basis = [&](std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(g(a, j), g(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(g(i, a), g(i, b));
  };
  Signature sig;
  for (std::size_t p = 0; p < n; ++p) {
    if (g(p, p) == 0) {
      std::size_t q = p + 1;
      while (q < n && g(q, q) == 0) ++q;
      if (q < n) {
        swap_basis(p, q);
      } else {
        q = p + 1;
        while (q < n && g(p, q) == 0) ++q;
        if (q == n) {
          ++sig.null;  // p is orthogonal to everything left
          continue;
        }
        add_to(p, q, 1);  // g(p,p) becomes 2 g(p,q) != 0
      }
    }
    const Scalar pivot = g(p, p);
    for (std::size_t i = p + 1; i < n; ++i)
      if (g(i, p) != 0) add_to(i, p, -g(i, p) / pivot);
    (pivot > 0 ? sig.positive : sig.negative)++;
  }
  return sig;
}

/// Leading principal minors alternate in sign, starting negative.
inline bool is_negative_definite(const Matrix& g) {
  if (!is_symmetric(g)) return false;
  for (std::size_t m = 1; m <= g.rows(); ++m) {
    Scalar minor = determinant(g.block(0, 0, m, m));
    if (m % 2 == 1 ? !(minor < 0) : !(minor > 0)) return false;
  }
  return true;
}

}  // namespace numgk
