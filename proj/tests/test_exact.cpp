#include <gtest/gtest.h>

#include <random>

#include "coxkit/exact.hpp"
#include "oracles.hpp"

namespace {

using namespace coxkit::exact;

RealCyclotomic random_element(std::mt19937_64& rng, unsigned conductor) {
  const auto& mp = minimal_polynomial(conductor);
  std::vector<Integer> c(mp.size() - 1);
  for (auto& x : c) x = static_cast<long>(rng() % 11) - 5;
  return RealCyclotomic::from_coefficients(conductor, c);
}

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

TEST(RealCyclotomic, AlphaSquared) {
  const auto a3 = RealCyclotomic::alpha(3);
  EXPECT_EQ(ring_arith(a3, a3, RingOp::Mul), RealCyclotomic(1));
  const auto a4 = RealCyclotomic::alpha(4);
  EXPECT_EQ(ring_arith(a4, a4, RingOp::Mul), RealCyclotomic(2));
}

TEST(RealCyclotomic, AdditiveInverse) {
  std::mt19937_64 rng(1);
  for (unsigned L : {3u, 5u, 7u, 8u, 12u}) {
    const auto a = random_element(rng, L);
    EXPECT_TRUE(ring_arith(a, ring_arith(a, a, RingOp::Neg), RingOp::Add).is_zero());
  }
}

TEST(RealCyclotomic, Sign) {
  EXPECT_EQ(sign_of(RealCyclotomic(0)), 0);
  const auto a4 = RealCyclotomic::alpha(4);
  EXPECT_EQ(sign_of(a4), 1);
  EXPECT_EQ(sign_of(a4 - RealCyclotomic(4, 2)), -1);
}

TEST(RealCyclotomic, MinimalPolynomials) {
  EXPECT_EQ(minimal_polynomial(4), (std::vector<Integer>{-2, 0, 1}));
  EXPECT_EQ(minimal_polynomial(5), (std::vector<Integer>{-1, -1, 1}));
  EXPECT_EQ(minimal_polynomial(6), (std::vector<Integer>{-3, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<Integer>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<Integer>{1, 0, 1}));
}

TEST(RealCyclotomic, TwoCosValues) {
  // 2cos(pi/5) is the golden ratio: x^2 = x + 1
  const auto phi = RealCyclotomic::two_cos_pi_over(5, 10);
  EXPECT_EQ(phi * phi, phi + RealCyclotomic(1));
  EXPECT_EQ(RealCyclotomic::two_cos_pi_over(2, 5), RealCyclotomic(0));
  EXPECT_EQ(RealCyclotomic::two_cos_pi_over(3, 12), RealCyclotomic(1));
  EXPECT_EQ(RealCyclotomic::two_cos_pi_over(0, 4), RealCyclotomic(2));
  EXPECT_NEAR(RealCyclotomic::two_cos_pi_over(7, 7).approx(), 2 * std::cos(M_PI / 7), 1e-12);
}

TEST(RealCyclotomic, ValuesCompareAcrossConductors) {
  EXPECT_EQ(RealCyclotomic(3, 1), RealCyclotomic(4, 1));
  EXPECT_EQ(RealCyclotomic::alpha(4).lifted_to(8) * RealCyclotomic::alpha(4).lifted_to(8), RealCyclotomic(2));
}

TEST(RealCyclotomic, RingAxiomsOnRandomSamples) {
  std::mt19937_64 rng(2);
  for (unsigned L : {5u, 7u, 8u, 9u, 12u}) {
    for (int t = 0; t < 30; ++t) {
      const auto a = random_element(rng, L), b = random_element(rng, L), c = random_element(rng, L);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_GE(sign_of(a * a), 0);
      const double x = a.approx();
      if (std::abs(x) > 1e-6) EXPECT_EQ(sign_of(a), x > 0 ? 1 : -1);
    }
  }
}

TEST(RealCyclotomic, EnclosureContainsValue) {
  const auto a = RealCyclotomic::alpha(7);
  const auto [lo, hi] = a.enclosure(Rational(1, 1000000));
  EXPECT_LE(lo, hi);
  EXPECT_LE(hi - lo, Rational(1, 1000000));
  EXPECT_LE(lo.get_d(), 2 * std::cos(M_PI / 7) + 1e-9);
  EXPECT_GE(hi.get_d(), 2 * std::cos(M_PI / 7) - 1e-9);
}

TEST(SmithNormalForm, Examples) {
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(2)).S, IntMatrix::identity(2));
  EXPECT_EQ(smith_normal_form(int_matrix({{2, 0}, {0, 3}})).S, int_matrix({{1, 0}, {0, 6}}));
  EXPECT_EQ(smith_normal_form(int_matrix({{2, 0}, {0, 0}})).S, int_matrix({{2, 0}, {0, 0}}));
  EXPECT_EQ(smith_normal_form(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).S,
            int_matrix({{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
}

TEST(SmithNormalForm, RandomInvariants) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    std::vector<std::vector<long long>> a(r, std::vector<long long>(c));
    IntMatrix A(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) A(i, j) = static_cast<long>(a[i][j] = static_cast<long long>(rng() % 19) - 9);
    const auto res = smith_normal_form(A);
    EXPECT_EQ(res.U * A * res.V, res.S);
    EXPECT_EQ(abs(determinant(res.U)), 1);
    EXPECT_EQ(abs(determinant(res.V)), 1);
    const auto d = oracle::determinantal_divisors(a);
    Integer prefix = 1;
    for (std::size_t k = 0; k < std::min(r, c); ++k) {
      prefix *= res.S(k, k);
      EXPECT_EQ(prefix, static_cast<long>(d[k]));
    }
  }
}

TEST(Adjugate, Examples) {
  const auto id = adjugate(IntMatrix::identity(3));
  EXPECT_EQ(id.B, IntMatrix::identity(3));
  EXPECT_EQ(id.d, 1);
  const auto a = adjugate(int_matrix({{2, 1}, {1, 1}}));
  EXPECT_EQ(a.B, int_matrix({{1, -1}, {-1, 2}}));
  EXPECT_EQ(a.d, 1);
  const auto s = int_matrix({{1, 1}, {1, 1}});
  const auto sing = adjugate(s);
  EXPECT_EQ(sing.d, 0);
  EXPECT_EQ(s * sing.B, IntMatrix(2, 2));
}

TEST(Adjugate, IsNotTheTranspose) {
  const auto a = int_matrix({{1, 2}, {3, 4}});
  const auto res = adjugate(a);
  EXPECT_NE(res.B, a.transposed());
  EXPECT_EQ(a * res.B, int_matrix({{-2, 0}, {0, -2}}));
}

TEST(Adjugate, RandomAgainstCofactors) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    IntMatrix A(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) A(i, j) = static_cast<long>(a[i][j] = static_cast<long long>(rng() % 7) - 3);
    const auto res = adjugate(A);
    const auto want = oracle::adjugate(a);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(res.B(i, j), static_cast<long>(want[i][j]));
    EXPECT_EQ(res.d, static_cast<long>(oracle::det(a)));
    EXPECT_EQ(determinant(A), res.d);
  }
}

TEST(Commutant, Examples) {
  const std::vector<RatMatrix> id{RatMatrix::identity(2)};
  EXPECT_EQ(commutant_dimension(id), 4u);
  const std::vector<RatMatrix> swap{RatMatrix{{0, 1}, {1, 0}}};
  EXPECT_EQ(commutant_dimension(swap), 2u);
  const std::vector<RatMatrix> s3{RatMatrix{{-1, 1}, {0, 1}}, RatMatrix{{1, 0}, {1, -1}}};
  EXPECT_EQ(commutant_dimension(s3), 1u);
  EXPECT_EQ(commutant_dimension({}, 3), 9u);
}

TEST(Rank, NullSpace) {
  const RatMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m), 2u);
  const auto ns = null_space(m);
  ASSERT_EQ(ns.size(), 1u);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += m(i, j) * ns[0][j];
    EXPECT_EQ(s, 0);
  }
}

TEST(Matrix, ShapeErrors) {
  const IntMatrix a(2, 3), b(2, 3);
  EXPECT_THROW(a * b, std::invalid_argument);
  EXPECT_THROW((IntMatrix{{1, 2}, {3}}), std::invalid_argument);
}

}  // namespace
