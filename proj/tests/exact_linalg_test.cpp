#include "numgk/charpoly.hpp"
#include "numgk/resultant.hpp"
#include "numgk/roots.hpp"
#include "numgk/spectral.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace numgk {
namespace {

RealAlgebraic quadratic_root(long long c0, long long c1, long long lo, long long hi) {
  return RealAlgebraic(IntPolynomial{c0, c1, 1}, Scalar(lo), Scalar(hi));
}

TEST(CharPoly, IdentityIsPowerOfLinear) {
  EXPECT_EQ(char_poly(Matrix::identity(4)), (IntPolynomial{1, -4, 6, -4, 1}));
}

TEST(CharPoly, TwoByTwoBlock) {
  Matrix m{{1, -4}, {4, -15}};
  EXPECT_EQ(char_poly(m), (IntPolynomial{1, 14, 1}));
}

TEST(CharPoly, ZeroMatrix) { EXPECT_EQ(char_poly(Matrix::zero(3)), (IntPolynomial{0, 0, 0, 1})); }

TEST(CharPoly, RationalMatrixClearsDenominators) {
  Matrix m{{Scalar(1, 2), 0}, {0, Scalar(1, 3)}};
  // (x - 1/2)(x - 1/3) = x^2 - 5/6 x + 1/6 -> 6x^2 - 5x + 1
  EXPECT_EQ(char_poly(m), (IntPolynomial{1, -5, 6}));
}

TEST(CharPoly, MatchesCofactorExpansionOracle) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 1 + trial % 5;
    Matrix m = oracle::random_matrix(rng, n, -6, 6);
    auto expected = oracle::char_poly_cofactor(m);
    auto got = char_poly(m);
    ASSERT_EQ(got.degree(), static_cast<int>(n));
    for (std::size_t i = 0; i <= n; ++i) ASSERT_EQ(Scalar(got.coeff(i)), expected[i]) << "trial " << trial;
  }
}

TEST(SturmCount, ExampleCases) {
  EXPECT_EQ(sturm_root_count(IntPolynomial{1, 14, 1}, Scalar(-100), Scalar(0)), 2);
  EXPECT_EQ(sturm_root_count(IntPolynomial{1, 0, 1}, Scalar(-10), Scalar(10)), 0);
  EXPECT_EQ(sturm_root_count(IntPolynomial{1, -2, 1}, Scalar(0), Scalar(2)), 1);
}

TEST(SturmCount, HalfOpenInterval) {
  IntPolynomial p{-1, 1};  // root at 1
  EXPECT_EQ(sturm_root_count(p, Scalar(0), Scalar(1)), 1);
  EXPECT_EQ(sturm_root_count(p, Scalar(1), Scalar(2)), 0);
}

TEST(SturmCount, ZeroPolynomialIsAnError) {
  EXPECT_THROW(sturm_root_count(IntPolynomial{}, Scalar(0), Scalar(1)), std::domain_error);
}

TEST(Isolate, QuadraticRoots) {
  auto roots = isolate_real_roots(IntPolynomial{1, 14, 1});
  ASSERT_EQ(roots.size(), 2U);
  const long double s3 = std::sqrt(3.0L);
  EXPECT_TRUE(roots[0].contains(Scalar(-13928, 1000)) || std::fabs(roots[0].approx() - (-7 - 4 * s3)) < 1e-12L);
  EXPECT_NEAR(static_cast<double>(roots[0].approx()), static_cast<double>(-7 - 4 * s3), 1e-12);
  EXPECT_NEAR(static_cast<double>(roots[1].approx()), static_cast<double>(-7 + 4 * s3), 1e-12);
  EXPECT_LT(roots[0].upper(), roots[1].lower());
}

TEST(Isolate, NoRealRoots) { EXPECT_TRUE(isolate_real_roots(IntPolynomial{1, 0, 1}).empty()); }

TEST(Isolate, CubeRootOfMinusOne) {
  auto roots = isolate_real_roots(IntPolynomial{1, 0, 0, 1});
  ASSERT_EQ(roots.size(), 1U);
  ASSERT_TRUE(roots[0].is_exact());
  EXPECT_EQ(roots[0].lower(), Scalar(-1));
}

TEST(Isolate, RepeatedAndRationalRootsCollapse) {
  // (2x - 1)^2 (x + 3) (x^2 - 2)
  IntPolynomial p = IntPolynomial{-1, 2}.pow(2) * IntPolynomial{3, 1} * IntPolynomial{-2, 0, 1};
  auto roots = isolate_real_roots(p);
  ASSERT_EQ(roots.size(), 4U);
  EXPECT_EQ(*roots[0].exact_value(), Scalar(-3));
  EXPECT_FALSE(roots[1].is_exact());
  EXPECT_EQ(*roots[2].exact_value(), Scalar(1, 2));
  EXPECT_FALSE(roots[3].is_exact());
}

TEST(Isolate, ZeroPolynomialIsAnError) { EXPECT_THROW(isolate_real_roots(IntPolynomial{}), std::domain_error); }

TEST(Isolate, MatchesSignScanOracle) {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coeff(-20, 20);
  std::uniform_int_distribution<int> deg(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int d = deg(rng);
    std::vector<long long> c(static_cast<std::size_t>(d) + 1);
    for (auto& x : c) x = coeff(rng);
    if (c.back() == 0) c.back() = 1;
    IntPolynomial p(std::vector<Integer>(c.begin(), c.end()));
    auto roots = isolate_real_roots(p);
    auto expected = oracle::sign_scan_roots(c, 22.0L, 1.0L / 512);
    ASSERT_EQ(roots.size(), expected.size()) << p.to_string();
    for (std::size_t i = 0; i < roots.size(); ++i)
      EXPECT_NEAR(static_cast<double>(roots[i].approx()), static_cast<double>(expected[i]), 1e-6);
  }
}

TEST(ModulusSquared, LinearPolynomial) {
  auto roots = isolate_real_roots(modulus_squared_poly(IntPolynomial{-2, 1}));
  ASSERT_FALSE(roots.empty());
  EXPECT_EQ(*roots.back().exact_value(), Scalar(4));
}

TEST(ModulusSquared, GaussianUnits) {
  auto roots = isolate_real_roots(modulus_squared_poly(IntPolynomial{1, 0, 1}));
  ASSERT_EQ(roots.size(), 2U);
  EXPECT_EQ(*roots.front().exact_value(), Scalar(-1));
  EXPECT_EQ(*roots.back().exact_value(), Scalar(1));
}

TEST(ModulusSquared, SquareOfSevenPlusFourRootThree) {
  auto roots = isolate_real_roots(modulus_squared_poly(IntPolynomial{1, 14, 1}));
  ASSERT_FALSE(roots.empty());
  // (7 + 4 sqrt 3)^2 = 97 + 56 sqrt 3, a root of t^2 - 194 t + 1.
  EXPECT_TRUE(roots.back() == quadratic_root(1, -194, 190, 200));
}

TEST(ModulusSquared, ConstantIsAnError) {
  EXPECT_THROW(modulus_squared_poly(IntPolynomial{5}), std::domain_error);
}

TEST(SpectralRadius, IdentityIsExactlyOne) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto rho = spectral_radius(Matrix::identity(n));
    ASSERT_TRUE(rho.is_exact());
    EXPECT_EQ(rho.lower(), Scalar(1));
  }
}

TEST(SpectralRadius, ZeroMatrixIsExactZero) {
  auto rho = spectral_radius(Matrix::zero(3));
  ASSERT_TRUE(rho.is_exact());
  EXPECT_EQ(rho.lower(), Scalar(0));
}

TEST(SpectralRadius, BiellipticTypeThreeComposite) {
  // Image rows of the type-3 composite (n = 4, k = 1).
  Matrix rows{{1, -4, -1, 4}, {4, -15, -4, 15}, {0, 0, 1, -4}, {0, 0, 1, -3}};
  auto rho = spectral_radius(rows.transpose());
  EXPECT_TRUE(rho == quadratic_root(1, -14, 13, 14));
  EXPECT_EQ(rho.decimal(9), "13.928203230");
}

TEST(SpectralRadius, K3CompositeIsExactlyOne) {
  Matrix m{{-1, 2, -1}, {-1, 1, 0}, {-1, 0, 0}};
  EXPECT_EQ(char_poly(m), (IntPolynomial{1, 0, 0, 1}));
  auto rho = spectral_radius(m);
  ASSERT_TRUE(rho.is_exact());
  EXPECT_EQ(rho.lower(), Scalar(1));
}

TEST(SpectralRadius, ComplexDominantEigenvalues) {
  // Rotation-scaling [[1,-2],[2,1]] has eigenvalues 1 +- 2i, modulus sqrt 5.
  auto rho = spectral_radius(Matrix{{1, -2}, {2, 1}});
  EXPECT_TRUE(rho == RealAlgebraic(IntPolynomial{-5, 0, 1}, Scalar(2), Scalar(3)));
}

TEST(Refine, SquareRootOfTwo) {
  RealAlgebraic r(IntPolynomial{-2, 0, 1}, Scalar(1), Scalar(2));
  auto narrow = r.refine(Scalar(1, 1000));
  EXPECT_LE(narrow.width(), Scalar(1, 1000));
  // Bisection oracle in floating point.
  double lo = 1, hi = 2;
  for (int i = 0; i < 60; ++i) {
    double mid = (lo + hi) / 2;
    (mid * mid < 2 ? lo : hi) = mid;
  }
  EXPECT_LE(narrow.lower(), Scalar(lo));
  EXPECT_GE(narrow.upper(), Scalar(hi));
}

TEST(Refine, ExactPointIsUnchanged) {
  RealAlgebraic three(Scalar(3));
  auto r = three.refine(Scalar(1, 10));
  EXPECT_TRUE(r.is_exact());
  EXPECT_EQ(r.lower(), Scalar(3));
}

TEST(Refine, SevenPlusFourRootThreeToNineDigits) {
  auto r = quadratic_root(1, -14, 13, 14).refine(Scalar(1, 1000000000));
  EXPECT_LE(r.width(), Scalar(1, 1000000000));
  EXPECT_TRUE(r.contains(parse_scalar("139282032302/10000000000")) ||
              (r.lower() <= parse_scalar("139282032303/10000000000") &&
               r.upper() >= parse_scalar("139282032301/10000000000")));
}

TEST(Refine, NonPositiveWidthIsRejected) {
  EXPECT_THROW(RealAlgebraic(Scalar(1)).refine(Scalar(0)), std::invalid_argument);
}

TEST(RealAlgebraic, CompareAgainstRationalsIsExact) {
  auto r = quadratic_root(-2, 0, 1, 2);
  EXPECT_EQ(r.compare(Scalar(1)), 1);
  EXPECT_EQ(r.compare(Scalar(141421, 100000)), 1);
  EXPECT_EQ(r.compare(Scalar(141422, 100000)), -1);
  EXPECT_EQ(RealAlgebraic(Scalar(1)).compare(Scalar(1)), 0);
}

TEST(RealAlgebraic, RejectsNonIsolatingInterval) {
  EXPECT_THROW(RealAlgebraic(IntPolynomial{-2, 0, 1}, Scalar(-2), Scalar(2)), std::invalid_argument);
  EXPECT_THROW(RealAlgebraic(IntPolynomial{-2, 0, 1}, Scalar(2), Scalar(3)), std::invalid_argument);
}

TEST(RealAlgebraic, PowerMatchesResultantPolynomial) {
  auto r = quadratic_root(-2, 0, 1, 2);
  auto sq = power(r, 2);
  ASSERT_TRUE(sq.is_exact());
  EXPECT_EQ(sq.lower(), Scalar(2));
  auto cube = power(quadratic_root(1, -14, 13, 14), 3);
  EXPECT_NEAR(static_cast<double>(cube.approx()), std::pow(7 + 4 * std::sqrt(3.0), 3), 1e-6);
}

// Invariant suites ---------------------------------------------------------

Matrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> amount(-2, 2);
  Matrix m = Matrix::identity(n);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = static_cast<std::size_t>(pick(rng));
    std::size_t j = static_cast<std::size_t>(pick(rng));
    if (i == j) continue;
    Matrix e = Matrix::identity(n);
    e(i, j) = amount(rng);
    m = e * m;
  }
  if (pick(rng) == 0) m = Scalar(-1) * m;
  return m;
}

TEST(SpectralInvariants, PowerLaw) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_unimodular(rng, 2 + trial % 3);
    auto rho = spectral_radius(m);
    for (unsigned k = 1; k <= 4; ++k) ASSERT_TRUE(spectral_radius(m.power(k)) == power(rho, k)) << trial;
  }
}

TEST(SpectralInvariants, TransposeInvariance) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = oracle::random_matrix(rng, 1 + trial % 4, -4, 4);
    if (m.is_zero()) continue;
    ASSERT_TRUE(spectral_radius(m) == spectral_radius(m.transpose()));
  }
}

TEST(SpectralInvariants, UnimodularRadiusAtLeastOne) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_unimodular(rng, 2 + trial % 4);
    ASSERT_EQ(abs_scalar(determinant(m)), Scalar(1));
    ASSERT_GE(spectral_radius(m).compare(Scalar(1)), 0);
  }
}

TEST(SpectralInvariants, PowerNormCrossCheck) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix m = oracle::random_matrix(rng, 2 + trial % 3, -3, 3);
    if (m.is_zero()) continue;
    auto rho = spectral_radius(m);
    long double estimate = oracle::power_norm_root(m, 32);
    long double r = rho.approx();
    EXPECT_LE(estimate, 2 * r + 1e-9L);
    EXPECT_GE(estimate, r / 2 - 1e-9L);
  }
}

}  // namespace
}  // namespace numgk
