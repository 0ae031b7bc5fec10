#include "numgk/actions.hpp"
#include "numgk/charpoly.hpp"
#include "numgk/spectral.hpp"
#include "numgk/tables.hpp"

#include <gtest/gtest.h>

#include <random>

namespace numgk {
namespace {

Matrix images(std::initializer_list<std::initializer_list<Scalar>> rows) { return Matrix(rows).transpose(); }

TEST(TensorLineBundle, MinusHMatchesDisplayedImages) {
  for (int t = 1; t <= 7; ++t) {
    SurfaceModel m = bielliptic(t);
    const Scalar n = m.n, k = m.k;
    Matrix expected = images({{1, -n, -k, n * k}, {0, 1, 0, -k}, {0, 0, 1, -n}, {0, 0, 0, 1}});
    EXPECT_EQ(tensor_line_bundle(m, -m.n, -m.k), expected) << "type " << t;
    EXPECT_EQ(generator_matrix(GeneratorToken::tensor_h(-1), m), expected);
  }
}

TEST(TensorLineBundle, TrivialAndSingleTwist) {
  SurfaceModel m = bielliptic(2);
  EXPECT_EQ(tensor_line_bundle(m, 0, 0), Matrix::identity(4));
  Matrix a = tensor_line_bundle(m, 1, 0);
  EXPECT_EQ(a.column(2), (std::vector<Scalar>{0, 0, 1, 1}));  // B -> B + [pt]
  EXPECT_THROW(tensor_line_bundle(k3(), 1, 0), IncompatibleError);
}

TEST(TensorLineBundle, HomomorphismAndUnipotence) {
  SurfaceModel m = bielliptic(6);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-7, 7);
  for (int trial = 0; trial < 50; ++trial) {
    long long a = dist(rng), b = dist(rng), a2 = dist(rng), b2 = dist(rng);
    Matrix x = tensor_line_bundle(m, a, b);
    ASSERT_EQ(x * tensor_line_bundle(m, a2, b2), tensor_line_bundle(m, a + a2, b + b2));
    Matrix nil = x - Matrix::identity(4);
    ASSERT_TRUE((nil * nil * nil).is_zero());
    ASSERT_EQ(determinant(x), 1);
    ASSERT_TRUE(is_numerical_isometry(x, m).isometry);
  }
}

TEST(Shift, MinusIdentity) {
  SurfaceModel m = bielliptic(3);
  Matrix s = shift(m);
  EXPECT_EQ(s * s, Matrix::identity(4));
  EXPECT_EQ(spectral_radius(s), RealAlgebraic(Scalar(1)));
  Matrix phi = compose_matrix(table2_word(), m);
  EXPECT_EQ(s * phi, phi * s);
  EXPECT_EQ(shift(k3(2)), Scalar(-1) * Matrix::identity(3));
}

TEST(RelativeFM, ImagesAsPrinted) {
  SurfaceModel t1 = bielliptic(1);
  Matrix p = relative_fm_potter(t1);
  EXPECT_EQ(p.column(1), (std::vector<Scalar>{2, 1, 0, 0}));
  for (int t = 1; t <= 7; ++t)
    EXPECT_EQ(relative_fm_potter(bielliptic(t)).column(0), (std::vector<Scalar>{1, 0, 0, 0}));
  EXPECT_EQ(relative_fm_potter(bielliptic(6)).column(3), (std::vector<Scalar>{0, 0, 3, 1}));
  EXPECT_THROW(relative_fm_potter(k3()), IncompatibleError);
}

TEST(Compose, PrintedProductIsTensorAfterFMInColumnConvention) {
  for (int t = 1; t <= 7; ++t) {
    SurfaceModel m = bielliptic(t);
    Matrix printed = printed_m2m1(m.n, m.k);
    // The displayed array multiplies the displayed image-row arrays M2 * M1.
    Matrix m1_rows = image_rows(tensor_line_bundle(m, -m.n, -m.k));
    Matrix m2_rows = image_rows(relative_fm_potter(m));
    EXPECT_EQ(m2_rows * m1_rows, printed) << "type " << t;
    EXPECT_EQ(image_rows(compose_matrix(parse_word("tensorH(-1);fm_p"), m)), printed) << "type " << t;
    // The word fm_p;tensorH(-1) gives the conjugate product, same spectrum.
    Matrix word = compose_matrix(parse_word("fm_p;tensorH(-1)"), m);
    EXPECT_EQ(char_poly(word), char_poly(printed));
  }
}

TEST(Compose, EmptyWordAndInverseWord) {
  SurfaceModel m = bielliptic(7);
  EXPECT_EQ(compose_matrix({}, m), Matrix::identity(4));
  GeneratorWord w = parse_word("fm_p;tensor(2,-3);shift;tensorH(-1);fm_p");
  GeneratorWord both = w;
  for (const auto& t : inverse_word(w)) both.push_back(t);
  EXPECT_EQ(compose_matrix(both, m), Matrix::identity(4));
}

TEST(Compose, RightmostAppliedFirst) {
  SurfaceModel m = bielliptic(3);
  Matrix a = generator_matrix(GeneratorToken::fm_p(), m);
  Matrix b = generator_matrix(GeneratorToken::tensor(1, 2), m);
  EXPECT_EQ(compose_matrix(parse_word("fm_p;tensor(1,2)"), m), a * b);
}

TEST(Compose, IncompatibleTokens) {
  EXPECT_THROW(compose_matrix(parse_word("twistO"), bielliptic(1)), IncompatibleError);
  EXPECT_THROW(compose_matrix(parse_word("fm_p"), k3()), IncompatibleError);
  EXPECT_THROW(compose_matrix(parse_word("lift(fm_p)"), bielliptic(1)), IncompatibleError);
}

TEST(Parse, TokenSyntaxRoundTrips) {
  for (const char* text : {"tensor(3,-4)", "tensorH(-1)", "shift", "fm_p", "twistO", "tensorHK3(-1)", "inv(fm_p)",
                           "lift(twistO;tensorHK3(-1))", "lift(fm_p|0,1;-1,0)"})
    EXPECT_EQ(parse_token(text).to_string(), text);
  EXPECT_EQ(to_string(parse_word(" fm_p ; tensorH(-1) ")), "fm_p;tensorH(-1)");
  EXPECT_TRUE(parse_word("").empty());
}

TEST(Parse, Errors) {
  for (const char* text : {"tensor(1)", "tensor(a,b)", "foo", "tensorH()", "fm_p(", "inv(fm_p", "tensor(1,2))",
                           "lift(fm_p|1,2;3)"})
    EXPECT_THROW(parse_word(text), ParseError) << text;
}

TEST(SphericalTwist, ReflectionExamples) {
  SurfaceModel m = k3(1);
  Matrix t = spherical_twist_O(m);
  EXPECT_EQ(t * std::span<const Scalar>(NumClass{1, 0, 1}), (NumClass{-1, 0, -1}));
  EXPECT_EQ(t * std::span<const Scalar>(NumClass{0, 1, 0}), (NumClass{0, 1, 0}));
  EXPECT_EQ(t * std::span<const Scalar>(NumClass{1, 0, 0}), (NumClass{0, 0, -1}));
  for (int d = 1; d <= 4; ++d) {
    Matrix td = spherical_twist_O(k3(d));
    EXPECT_EQ(td * td, Matrix::identity(3));
    EXPECT_TRUE(is_numerical_isometry(td, k3(d)).isometry);
  }
}

TEST(TensorHK3, FormulaAndIsometry) {
  SurfaceModel m = k3(1);
  Matrix h = tensor_minus_H_K3(m);
  EXPECT_EQ(h * std::span<const Scalar>(NumClass{0, 0, 1}), (NumClass{0, 0, 1}));
  EXPECT_EQ(h * std::span<const Scalar>(NumClass{1, 0, 1}), (NumClass{1, -1, 2}));
  for (int d = 1; d <= 4; ++d) {
    SurfaceModel md = k3(d);
    Matrix hd = tensor_minus_H_K3(md);
    // (r, m, s) -> (r, m - r, s - 2d m + d r)
    for (int r = -2; r <= 2; ++r)
      for (int x = -2; x <= 2; ++x) {
        NumClass v{r, x, 3};
        EXPECT_EQ(hd * std::span<const Scalar>(v), (NumClass{r, x - r, Scalar(3 - 2 * d * x + d * r)}));
      }
    EXPECT_TRUE(is_numerical_isometry(hd, md).isometry);
    EXPECT_EQ(tensor_H_K3(md, 2), tensor_H_K3(md, 4) * hd.power(2));
  }
}

TEST(K3Composite, CharPolyAndRadius) {
  SurfaceModel m = k3(1);
  Matrix c = compose_matrix(parse_word("twistO;tensorHK3(-1)"), m);
  EXPECT_EQ(c, (Matrix{{-1, 2, -1}, {-1, 1, 0}, {-1, 0, 0}}));
  EXPECT_EQ(char_poly(c), (IntPolynomial{1, 0, 0, 1}));
  RealAlgebraic rho = spectral_radius(c);
  ASSERT_TRUE(rho.is_exact());
  EXPECT_EQ(rho.lower(), 1);
}

TEST(LiftBlock, IdentityBaseWithMinusIdentityK) {
  CoverModel c = cover_block_model(bielliptic(1), Scalar(-1) * Matrix::identity(2));
  Matrix lifted = lift_block_matrix(Matrix::identity(4), Scalar(-1) * Matrix::identity(2), *c.model);
  EXPECT_EQ(spectral_radius(lifted), RealAlgebraic(Scalar(1)));
}

TEST(LiftBlock, PreservesTable2Radius) {
  SurfaceModel base = bielliptic(3);
  CoverModel c = cover_block_model(base, Matrix{{-2, 1}, {1, -2}});
  ActionMatrix phi = compose(table2_word(), base);
  ActionMatrix lifted = lift_block(phi, Matrix{{0, 1}, {1, 0}}, c.model);
  EXPECT_EQ(spectral_radius(lifted.matrix), spectral_radius(phi.matrix));
  EXPECT_EQ(compose_matrix(lifted.word, *c.model), lifted.matrix);
  EXPECT_EQ(lifted.word.front().to_string(), "lift(fm_p;tensorH(-1)|0,1;1,0)");
}

TEST(LiftBlock, RejectsNonIsometries) {
  CoverModel c = cover_block_model(bielliptic(2), Scalar(-1) * Matrix::identity(2));
  try {
    lift_block_matrix(Matrix::identity(4), Scalar(2) * Matrix::identity(2), *c.model);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "K-block must be unitary");
  }
  EXPECT_THROW(lift_block_matrix(Matrix::identity(3), Matrix::identity(2), *c.model), IncompatibleError);
}

TEST(LiftBlock, BaseTokensAutoLift) {
  CoverModel c = cover_block_model(k3(1), Matrix{{-2}});
  Matrix m = compose_matrix(parse_word("twistO;tensorHK3(-1)"), *c.model);
  EXPECT_EQ(m.block(0, 0, 3, 3), compose_matrix(parse_word("twistO;tensorHK3(-1)"), k3(1)));
  EXPECT_EQ(m(3, 3), 1);
  EXPECT_EQ(compose_matrix(parse_word("lift(twistO;tensorHK3(-1)|-1)"), *c.model)(3, 3), -1);
}

TEST(Isometry, Witnesses) {
  SurfaceModel t1 = bielliptic(1);
  Matrix d{{2, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  IsometryVerdict v = is_numerical_isometry(d, t1);
  EXPECT_FALSE(v.isometry);
  EXPECT_EQ(t1.basis[v.i], "[S]");
  EXPECT_EQ(t1.basis[v.j], "[pt]");

  for (int t = 1; t <= 7; ++t) {
    SurfaceModel m = bielliptic(t);
    IsometryVerdict f = is_numerical_isometry(relative_fm_potter(m), m);
    EXPECT_EQ(f.isometry, m.n == m.k) << "type " << t;
    if (!f.isometry) {
      EXPECT_EQ(m.basis[f.i], "A");
      EXPECT_EQ(m.basis[f.j], "[pt]");
      EXPECT_EQ(f.before, 0);
      EXPECT_EQ(f.after, m.n - m.k);
    }
  }
}

TEST(FiberProjection, CalibratedFunctional) {
  for (int t = 1; t <= 7; ++t) {
    SurfaceModel m = bielliptic(t);
    Matrix p = relative_fm_potter(m);
    EXPECT_TRUE(fiber_projection_check(p, m, Matrix{{1, 1}, {0, 1}}).consistent) << "type " << t;
    EXPECT_TRUE(fiber_projection_check(p * p, m, Matrix{{1, 2}, {0, 1}}).consistent);
    EXPECT_TRUE(fiber_projection_check(Matrix::identity(4), m, Matrix::identity(2)).consistent);
    EXPECT_FALSE(fiber_projection_check(p, m, Matrix::identity(2)).consistent);
  }
  EXPECT_FALSE(fiber_projection_check(Matrix::identity(4), bielliptic(1), Matrix{{2, 0}, {0, 1}}).consistent);
}

TEST(Determinant, UnimodularGeneratorsAndWords) {
  std::mt19937_64 rng(42);
  const char* tokens[] = {"tensor(1,0)", "tensor(0,1)", "tensor(-2,3)", "tensorH(-1)", "fm_p", "shift", "inv(fm_p)"};
  for (int t = 1; t <= 7; ++t) {
    SurfaceModel m = bielliptic(t);
    for (int trial = 0; trial < 30; ++trial) {
      GeneratorWord w;
      std::size_t len = rng() % 7;
      for (std::size_t i = 0; i < len; ++i) w.push_back(parse_token(tokens[rng() % 7]));
      Scalar det = determinant(compose_matrix(w, m));
      ASSERT_TRUE(det == 1 || det == -1) << to_string(w);
    }
  }
}

}  // namespace
}  // namespace numgk
