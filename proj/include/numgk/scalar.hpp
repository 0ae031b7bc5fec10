#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace numgk {

using Integer = boost::multiprecision::cpp_int;
/// Exact rational, always in lowest terms with a positive denominator.
using Scalar = boost::multiprecision::cpp_rational;

inline Integer numerator(const Scalar& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Scalar& q) { return boost::multiprecision::denominator(q); }

inline Scalar make_scalar(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  return Scalar(num, den);
}

inline int sign(const Integer& z) { return z.sign(); }
inline int sign(const Scalar& q) { return q.sign(); }

inline Integer abs_int(const Integer& z) { return z < 0 ? Integer(-z) : z; }
inline Scalar abs_scalar(const Scalar& q) { return q < 0 ? Scalar(-q) : q; }

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Integer floor(const Scalar& q) { return floor_div(numerator(q), denominator(q)); }
inline Integer ceil(const Scalar& q) { return -floor_div(-numerator(q), denominator(q)); }

inline Integer gcd(Integer a, Integer b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Integer t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd(a, b) * b);
}

inline Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result = 1;
  Scalar b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

inline Integer pow(const Integer& base, unsigned exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

/// Floor of the square root of a nonnegative integer.
inline Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  return boost::multiprecision::sqrt(n);
}

inline bool is_perfect_square(const Integer& n) {
  if (n < 0) return false;
  Integer root = isqrt(n);
  return root * root == n;
}

/// "p" or "p/q".
inline std::string to_string(const Scalar& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "p", "-p", or "p/q".
inline Scalar parse_scalar(std::string_view text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Scalar(Integer(std::string(text)));
    Integer num(std::string(text.substr(0, slash)));
    Integer den(std::string(text.substr(slash + 1)));
    return make_scalar(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational number: " + std::string(text));
  }
}

/// Rounds q to the nearest multiple of 10^-digits (ties away from zero) and
/// writes it in fixed-point notation.
inline std::string to_decimal(const Scalar& q, unsigned digits) {
  Integer scale = pow(Integer(10), digits);
  Scalar scaled = q * scale;
  bool negative = scaled < 0;
  Scalar mag = negative ? Scalar(-scaled) : scaled;
  Integer rounded = floor(mag + Scalar(1, 2));
  std::string body = rounded.str();
  if (digits > 0) {
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
  }
  if (negative && rounded != 0) body.insert(0, "-");
  return body;
}

}  // namespace numgk
