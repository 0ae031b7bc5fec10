#pragma once

// Independent reference computations used only by the test suites. None of
// these go through the library's char_poly / Sturm / resultant paths.

#include "numgk/matrix.hpp"
#include "numgk/polynomial.hpp"

#include <cmath>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

namespace numgk::oracle {

using RatPoly = std::vector<Scalar>;  // lowest degree first

inline RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline RatPoly poly_add(const RatPoly& a, const RatPoly& b, const Scalar& sb = 1) {
  RatPoly c(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = (i < a.size() ? a[i] : Scalar(0)) + sb * (i < b.size() ? b[i] : Scalar(0));
  return c;
}

/// det of a matrix of polynomials by Laplace expansion along row 0.
inline RatPoly cofactor_det(const std::vector<std::vector<RatPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  RatPoly acc;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<RatPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<RatPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    acc = poly_add(acc, poly_mul(m[0][col], cofactor_det(minor)), col % 2 == 0 ? 1 : -1);
  }
  return acc;
}

/// det(x*I - m) by brute-force cofactor expansion.
inline RatPoly char_poly_cofactor(const Matrix& m) {
  const std::size_t n = m.dimension();
  std::vector<std::vector<RatPoly>> xm(n, std::vector<RatPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) xm[i][j] = i == j ? RatPoly{-m(i, j), 1} : RatPoly{-m(i, j)};
  RatPoly p = cofactor_det(xm);
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline RatPoly trimmed(RatPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

/// Euclidean division over Q: {quotient, remainder}.
inline std::pair<RatPoly, RatPoly> poly_divmod(RatPoly a, const RatPoly& b) {
  a = trimmed(a);
  if (a.size() < b.size()) return {{}, a};
  RatPoly q(a.size() - b.size() + 1);
  for (std::size_t k = a.size() - 1;; --k) {
    Scalar f = a[k] / b.back();
    q[k + 1 - b.size()] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + 1 - b.size() + j] -= f * b[j];
    if (k + 1 == b.size()) break;
  }
  return {trimmed(q), trimmed(a)};
}

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  a = trimmed(a);
  b = trimmed(b);
  while (!b.empty()) {
    RatPoly r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  Scalar lc = a.back();
  for (auto& x : a) x /= lc;
  return a;
}

/// Distinct real roots by a dense sign scan of the square-free part (computed
/// with plain Euclid over Q). Returns approximate root locations, ascending.
inline std::vector<long double> sign_scan_roots(const std::vector<long long>& coeffs, long double bound,
                                                long double step) {
  RatPoly p(coeffs.begin(), coeffs.end());
  p = trimmed(p);
  RatPoly dp;
  for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<long long>(i));
  RatPoly g = p.size() > 1 ? poly_divmod(p, poly_gcd(p, dp)).first : p;
  std::vector<long double> c;
  for (const auto& x : g) c.push_back(numerator(x).convert_to<long double>() / denominator(x).convert_to<long double>());
  auto f = [&](long double x) {
    long double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  std::vector<long double> roots;
  long double x0 = -bound;
  long double f0 = f(x0);
  for (long double x1 = x0 + step; x1 <= bound + step / 2; x1 += step) {
    long double f1 = f(x1);
    if (f0 == 0) {
      roots.push_back(x0);
    } else if (f1 != 0 && (f0 < 0) != (f1 < 0)) {
      long double a = x0, b = x1, fa = f0;
      for (int it = 0; it < 200; ++it) {
        long double mid = (a + b) / 2;
        long double fm = f(mid);
        if (fm == 0) {
          a = b = mid;
          break;
        }
        if ((fm < 0) == (fa < 0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      roots.push_back((a + b) / 2);
    }
    x0 = x1;
    f0 = f1;
  }
  return roots;
}

/// Random integer matrix with entries in [lo, hi].
inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

inline long double inf_norm(const std::vector<std::vector<long double>>& a) {
  long double best = 0;
  for (const auto& row : a) {
    long double s = 0;
    for (long double x : row) s += std::fabs(x);
    best = std::max(best, s);
  }
  return best;
}

/// ||m^n||_inf^(1/n) in floating point with renormalization.
inline long double power_norm_root(const Matrix& m, int n) {
  const std::size_t d = m.dimension();
  std::vector<std::vector<long double>> a(d, std::vector<long double>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      a[i][j] = numerator(m(i, j)).convert_to<long double>() / denominator(m(i, j)).convert_to<long double>();
  std::vector<std::vector<long double>> p = a;
  long double log_scale = 0;
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<long double>> next(d, std::vector<long double>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t j = 0; j < d; ++j) next[i][j] += p[i][l] * a[l][j];
    long double s = inf_norm(next);
    if (s == 0) return 0;
    for (auto& row : next)
      for (auto& x : row) x /= s;
    log_scale += std::log(s);
    p = next;
  }
  return std::exp((log_scale + std::log(inf_norm(p))) / n);
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
inline std::vector<long double> jacobi_eigenvalues(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<long double>> a(n, std::vector<long double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = numerator(m(i, j)).convert_to<long double>() / denominator(m(i, j)).convert_to<long double>();
  for (int sweep = 0; sweep < 100; ++sweep) {
    long double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30L) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0) continue;
        long double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        long double t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        long double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          long double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          long double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<long double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  return ev;
}

}  // namespace numgk::oracle
