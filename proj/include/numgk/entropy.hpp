#pragma once

#include "numgk/actions.hpp"
#include "numgk/factor.hpp"
#include "numgk/roots.hpp"
#include "numgk/spectral.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace numgk {

enum class GyStatus { Equality, LowerBoundOnly, KnownStrictGap };

inline std::string to_string(GyStatus s) {
  switch (s) {
    case GyStatus::Equality: return "Equality";
    case GyStatus::LowerBoundOnly: return "LowerBoundOnly";
    case GyStatus::KnownStrictGap: return "KnownStrictGap";
  }
  return "?";
}

inline constexpr unsigned kDefaultDigits = 12;
inline constexpr unsigned kMaxDigits = 80;

/// Decimal enclosure [lower, upper] of a transcendental value, rounded
/// outward at `digits` places; `decimal` is the rounded midpoint.
struct DecimalEnclosure {
  Scalar lower = 0;
  Scalar upper = 0;
  std::string decimal;
  unsigned digits = kDefaultDigits;
};

namespace detail {

using Float = boost::multiprecision::cpp_dec_float_100;

inline Float to_float(const Scalar& q) { return Float(numerator(q)) / Float(denominator(q)); }

}  // namespace detail

/// log(rho) with outward rounding; an exact 1 gives exactly 0.
inline DecimalEnclosure log_enclosure(const RealAlgebraic& rho, unsigned digits) {
  using detail::Float;
  digits = std::clamp(digits, 1u, kMaxDigits);
  DecimalEnclosure out;
  out.digits = digits;
  if (rho.is_exact() && rho.lower() == 1) {
    out.decimal = to_decimal(Scalar(0), digits);
    return out;
  }
  if (rho.compare(Scalar(0)) <= 0) throw std::domain_error("log of a non-positive spectral radius");
  const Integer scale = pow(Integer(10), digits);
  // Relative width 10^-(digits+3) keeps the log interval below one ulp of
  // the output.
  RealAlgebraic r = rho;
  while (!(r.lower() > 0)) r = r.refine(r.width() / 2);
  r = r.refine(r.lower() / Scalar(scale * 1000));
  const Float slack = boost::multiprecision::pow(Float(10), -90);
  Float lo_f = boost::multiprecision::log(detail::to_float(r.lower())) - slack;
  Float hi_f = boost::multiprecision::log(detail::to_float(r.upper())) + slack;
  const Float fscale = boost::multiprecision::pow(Float(10), static_cast<int>(digits));
  Integer lo_i = static_cast<Integer>(boost::multiprecision::floor(lo_f * fscale));
  Integer hi_i = static_cast<Integer>(boost::multiprecision::ceil(hi_f * fscale));
  out.lower = Scalar(lo_i, scale);
  out.upper = Scalar(hi_i, scale);
  if (rho.compare(Scalar(1)) >= 0 && out.lower < 0) out.lower = 0;
  Float mid = (lo_f + hi_f) / 2;
  Integer mid_i = static_cast<Integer>(boost::multiprecision::floor(mid * fscale * 10));
  out.decimal = to_decimal(Scalar(mid_i, scale * 10), digits);
  return out;
}

struct EntropyReport {
  std::string surface;
  std::string word;
  RealAlgebraic rho;
  DecimalEnclosure log_rho;
  bool positive = false;
  GyStatus gy_status = GyStatus::LowerBoundOnly;
  std::string equality_family;  // "bielliptic" or "abelian" when gy_status == Equality
  std::vector<std::string> citations;
  unsigned digits = kDefaultDigits;
};

inline const std::string kCiteLowerBound =
    "Ikeda 2021, Mass growth of objects and categorical entropy, Prop. 4.7: log rho([Phi]) <= h_cat(Phi)";
inline const std::string kCiteYoshioka =
    "Yoshioka 2020, Categorical entropy for Fourier-Mukai transforms on generic abelian surfaces, Prop. 2.10-2.11: "
    "h_cat(Phi) = log rho([Phi]) on abelian surfaces";
inline const std::string kCiteBielliptic =
    "Gromov-Yomdin type equality on bielliptic surfaces via the canonical cover (an abelian surface) and "
    "entropy-preserving equivariant lifts: h_cat(Phi) = log rho([Phi])";
inline const std::string kCiteOuchi =
    "Ouchi 2020, On entropy of spherical twists: h_cat(T_O o (- (x) O(-H))) > log rho on projective K3 surfaces";
inline const std::string kCiteEnriquesDescent =
    "the K3 counterexample descends to the Enriques quotient: equivariant lifts share categorical entropy and the "
    "action on K has spectral radius 1";

/// The word of `act` read on the root (non-block) model: a single lift token
/// is unwrapped, anything else is returned as is.
inline GeneratorWord root_word(const ActionMatrix& act) {
  if (act.word.size() == 1 && act.word.front().tag == GeneratorToken::Tag::LiftBlock && !act.word.front().inverse)
    return *act.word.front().base_word;
  return act.word;
}

/// Word shape [twistO; tensorHK3(m)] with m < 0 (anti-ample twist first).
inline bool is_known_gap_word(const GeneratorWord& w) {
  return w.size() == 2 && w[0].tag == GeneratorToken::Tag::SphericalTwistO && !w[0].inverse &&
         w[1].tag == GeneratorToken::Tag::TensorHK3 && !w[1].inverse && w[1].a < 0;
}

/// log rho as a lower bound for h_cat (valid for every Fourier-Mukai type
/// endofunctor of a surface).
inline DecimalEnclosure yomdin_lower_bound(const ActionMatrix& act, unsigned digits = kDefaultDigits) {
  return log_enclosure(spectral_radius(act.matrix), digits);
}

/// Full report with the Gromov-Yomdin status chosen by model kind and word
/// shape.
inline EntropyReport gy_gap_report(const ActionMatrix& act, unsigned digits = kDefaultDigits) {
  EntropyReport r;
  r.digits = std::clamp(digits, 1u, kMaxDigits);
  r.surface = act.model->describe();
  r.word = to_string(act.word);
  r.rho = spectral_radius_minimal(act.matrix);
  r.positive = r.rho.compare(Scalar(1)) > 0;
  r.log_rho = log_enclosure(r.rho, r.digits);
  const SurfaceModel& m = *act.model;
  r.citations.push_back(kCiteLowerBound);
  if (m.kind == SurfaceKind::Bielliptic || m.kind == SurfaceKind::AbelianBlock) {
    r.gy_status = GyStatus::Equality;
    r.equality_family = m.kind == SurfaceKind::Bielliptic ? "bielliptic" : "abelian";
    r.citations.push_back(kCiteYoshioka);
    if (m.kind == SurfaceKind::Bielliptic) r.citations.push_back(kCiteBielliptic);
  } else if ((m.kind == SurfaceKind::K3 || m.kind == SurfaceKind::EnriquesBlock) && is_known_gap_word(root_word(act))) {
    r.gy_status = GyStatus::KnownStrictGap;
    r.citations.push_back(kCiteOuchi);
    if (m.kind == SurfaceKind::EnriquesBlock) r.citations.push_back(kCiteEnriquesDescent);
  }
  return r;
}

inline EntropyReport entropy_bielliptic(const ActionMatrix& act, unsigned digits = kDefaultDigits) {
  require_kind(*act.model, SurfaceKind::Bielliptic, "entropy_bielliptic");
  return gy_gap_report(act, digits);
}

}  // namespace numgk
