#pragma once

#include "numgk/charpoly.hpp"
#include "numgk/matrix.hpp"
#include "numgk/polynomial.hpp"
#include "numgk/resultant.hpp"
#include "numgk/roots.hpp"

#include <stdexcept>
#include <utility>

namespace numgk {

/// Enclosure of the largest real root of p inside (lo, hi]; requires at
/// least one root there and p square-free.
inline RealAlgebraic largest_real_root(const IntPolynomial& p, Scalar lo, Scalar hi) {
  const SturmSequence s(p);
  if (s.count(lo, hi) < 1) throw std::domain_error("no real root in the search interval");
  while (s.count(lo, hi) > 1) {
    Scalar mid = (lo + hi) / 2;
    int above = s.count(mid, hi);
    if (above == 0) {
      // The largest root is at most mid; shrink from above.
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // Exactly one root in (lo, hi]; lo is not it.
  if (p.sign_at(hi) == 0) return RealAlgebraic(hi);
  while (p.sign_at(lo) == 0) {
    // lo is a smaller root; move it inside without losing the target.
    Scalar mid = (lo + hi) / 2;
    if (p.sign_at(mid) == 0) return RealAlgebraic(mid);
    if (s.count(mid, hi) == 1)
      lo = mid;
    else
      hi = mid;
  }
  return RealAlgebraic(RealAlgebraic::Trusted{}, p, lo, hi).collapse_if_rational();
}

/// Rational square root if q is the square of a rational.
inline bool rational_sqrt(const Scalar& q, Scalar& root) {
  if (q < 0) return false;
  Integer n = numerator(q);
  Integer d = denominator(q);
  if (!is_perfect_square(n) || !is_perfect_square(d)) return false;
  root = Scalar(isqrt(n), isqrt(d));
  return true;
}

/// Maximal modulus of the roots of p, certified. Path: drop zero roots,
/// square-free part, modulus-squared resultant, its largest real root
/// rho^2, then the positive square root as a root of r(x^2).
inline RealAlgebraic spectral_radius_of_polynomial(const IntPolynomial& p) {
  if (p.is_zero()) throw std::domain_error("spectral radius of the zero polynomial");
  IntPolynomial nonzero = p.without_zero_roots();
  if (nonzero.degree() <= 0) return RealAlgebraic(Scalar(0));
  IntPolynomial g = squarefree_part(nonzero);
  IntPolynomial r = squarefree_part(modulus_squared_poly(g));
  const Scalar bound(root_bound(r));
  RealAlgebraic rho_sq = largest_real_root(r, Scalar(0), bound);
  Scalar root;
  if (rho_sq.is_exact() && rational_sqrt(rho_sq.lower(), root)) return RealAlgebraic(root);
  IntPolynomial s = r.substitute_power(2);
  Scalar lo(isqrt(floor(rho_sq.lower())));
  Scalar hi(isqrt(ceil(rho_sq.upper())) + 1);
  return largest_real_root(s, lo, hi);
}

/// a^k as a certified real algebraic number, with defining polynomial
/// Res_y(f(y), x - y^k).
inline RealAlgebraic power(const RealAlgebraic& a, unsigned k) {
  if (k == 0) return RealAlgebraic(Scalar(1));
  if (a.is_exact()) return RealAlgebraic(pow(a.lower(), k));
  const IntPolynomial target = squarefree_part(power_poly(a.polynomial(), k));
  const SturmSequence chain(target);
  RealAlgebraic x = a;
  while (true) {
    if (x.lower() < 0 && x.upper() > 0) {
      x = x.refine(x.width() / 2);
      continue;
    }
    Scalar lo = pow(x.lower(), k);
    Scalar hi = pow(x.upper(), k);
    if (hi < lo) std::swap(lo, hi);
    int inside = lo == hi ? 1 : chain.count(lo, hi) + (target.sign_at(lo) == 0 ? 1 : 0);
    if (inside == 1) return RealAlgebraic(target, lo, hi).collapse_if_rational();
    x = x.refine(x.width() / 2);
  }
}

/// rho(m) = max |eigenvalue|. The zero matrix gives exact 0.
inline RealAlgebraic spectral_radius(const Matrix& m) {
  if (m.is_zero()) return RealAlgebraic(Scalar(0));
  return spectral_radius_of_polynomial(char_poly(m));
}

/// Exact test rho(m) > q for q >= 0, without building the full enclosure.
inline bool spectral_radius_exceeds(const Matrix& m, const Scalar& q) {
  if (q < 0) return true;
  IntPolynomial nonzero = char_poly(m).without_zero_roots();
  if (nonzero.degree() <= 0) return false;
  IntPolynomial r = squarefree_part(modulus_squared_poly(squarefree_part(nonzero)));
  return SturmSequence(r).count(q * q, Scalar(root_bound(r))) > 0;
}

}  // namespace numgk
