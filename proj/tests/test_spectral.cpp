#include <gtest/gtest.h>

#include "reflalg/errors.hpp"
#include "reflalg/spectral.hpp"

using namespace reflalg;

TEST(Rhat, Diagonal) {
  const CPoly u = CPoly::var(Var::z);
  const SpectralMatrix r = rhat(u);
  EXPECT_EQ(r(0, 0), NCPoly(u - 1));
  EXPECT_EQ(r(1, 1), NCPoly(u));
  EXPECT_EQ(r(2, 2), NCPoly(u));
  EXPECT_EQ(r(3, 3), NCPoly(u - 1));
  EXPECT_EQ(r(1, 2), NCPoly(-1));
  EXPECT_EQ(r(2, 1), NCPoly(-1));
}

TEST(Rhat, Unitarity) {
  const CPoly u = X();
  EXPECT_EQ(rhat(u) * rhat(-u), SpectralMatrix::identity(4).scaled(CPoly(1) - u * u));
}

TEST(Rhat, RankTwoAtOne) {
  // I - P: rows 1 and 4 vanish, rows 2 and 3 are negatives of each other.
  const SpectralMatrix r = rhat(CPoly(1));
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_TRUE(r(0, j).is_zero());
    EXPECT_TRUE(r(3, j).is_zero());
    EXPECT_EQ(r(1, j), -r(2, j));
  }
  EXPECT_FALSE(r(1, 1).is_zero());
}

TEST(YangBaxter, Zero) {
  EXPECT_TRUE(check_yang_baxter().is_zero());
}

TEST(YangBaxter, SpecializedYEqualsZ) {
  EXPECT_TRUE(check_yang_baxter().subst(Var::y, Z()).is_zero());
}

TEST(YangBaxter, WrongPermutationFails) {
  SpectralMatrix wrong = SpectralMatrix::identity(4);
  wrong(0, 0) = NCPoly();
  wrong(0, 3) = NCPoly(1);
  wrong(3, 3) = NCPoly();
  wrong(3, 0) = NCPoly(1);
  EXPECT_FALSE(check_yang_baxter(wrong).is_zero());
}

TEST(LMatrix, Entries) {
  const SpectralMatrix l = l_matrix(1);
  EXPECT_EQ(l(0, 1), -NCPoly::f(1));
  EXPECT_EQ(l(1, 0), -NCPoly::e(1));
  EXPECT_EQ(l(0, 0) + l(1, 1), NCPoly(X() * Rational(2) - 1));
  EXPECT_EQ(l(0, 0), NCPoly(X() - Rational(1, 2)) - NCPoly::h(1) * Rational(1, 2));
}

TEST(LMatrix, Determinant) {
  const SpectralMatrix l = l_matrix(1);
  const NCPoly d = NCPoly(-X() * X()) + (NCPoly(1) + casimir(1)) * Rational(1, 4);
  EXPECT_EQ(l * l.subst(Var::x, -X()), SpectralMatrix::diag({d, d}));
}

TEST(Rll, Zero) {
  for (unsigned site : {1u, 3u}) EXPECT_TRUE(check_rll(site).is_zero()) << site;
  auto r = check_rll(1);
  EXPECT_TRUE(r.rll.subst(Var::y, X()).is_zero());
}

TEST(Rll, FlippedSignFails) {
  SpectralMatrix l = l_matrix(1);
  l(1, 0) = -l(1, 0);
  EXPECT_FALSE(check_rll(l).is_zero());
}

TEST(LegEmbed, Diagonals) {
  const NCPoly a = NCPoly::h(1);
  const NCPoly b = NCPoly(X());
  const SpectralMatrix d = SpectralMatrix::diag({a, b});
  EXPECT_EQ(leg_embed(d, 1), SpectralMatrix::diag({a, a, b, b}));
  EXPECT_EQ(leg_embed(d, 2), SpectralMatrix::diag({a, b, a, b}));
  EXPECT_THROW(leg_embed(SpectralMatrix::identity(4), 1), DimensionMismatch);
  EXPECT_THROW(leg_embed(d, 3), std::invalid_argument);
}

TEST(MatOps, Basics) {
  const SpectralMatrix b = l_matrix(2);
  EXPECT_EQ(mat_mul(SpectralMatrix::identity(2), b), b);
  EXPECT_EQ(mat_add(b, SpectralMatrix(2)), b);
  EXPECT_THROW(mat_mul(b, SpectralMatrix::identity(4)), DimensionMismatch);
  EXPECT_THROW(mat_add(b, SpectralMatrix::identity(4)), DimensionMismatch);
}

TEST(MatOps, KronKeepsLeftFactorFirst) {
  const SpectralMatrix a = SpectralMatrix::diag({NCPoly::e(1), NCPoly(1)});
  const SpectralMatrix b = SpectralMatrix::diag({NCPoly::f(1), NCPoly(1)});
  EXPECT_EQ(kron(a, b)(0, 0), NCPoly::e(1) * NCPoly::f(1));
  EXPECT_EQ(kron(b, a)(0, 0), NCPoly::f(1) * NCPoly::e(1));
}

TEST(Reflection, Scalars) {
  EXPECT_TRUE(check_reflection(SpectralMatrix::identity(2)).is_zero());
  const SpectralMatrix b0 = SpectralMatrix::diag({NCPoly(X() - Mu0()), NCPoly(-X() - Mu0())});
  EXPECT_TRUE(check_reflection(b0).is_zero());
  // L(x) alone does not satisfy the reflection equation.
  EXPECT_FALSE(check_reflection(l_matrix(1)).is_zero());
}

TEST(Reflection, DressedLevelOne) {
  const SpectralMatrix b0 = SpectralMatrix::diag({NCPoly(X() - Mu0()), NCPoly(-X() - Mu0())});
  const SpectralMatrix l = l_matrix(1);
  EXPECT_TRUE(check_reflection(l * b0 * l).is_zero());
}

TEST(Dressing, DisjointSitesCommute) {
  const SpectralMatrix l1 = l_matrix(1);
  const SpectralMatrix l2 = l_matrix(2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t m = 0; m < 2; ++m) EXPECT_TRUE(commutator(l1(i, j), l2(k, m)).is_zero());
      }
    }
  }
}
