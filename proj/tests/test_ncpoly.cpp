#include <gtest/gtest.h>

#include "reflalg/errors.hpp"
#include "reflalg/ncpoly.hpp"

using namespace reflalg;

namespace {

NCPoly e(unsigned s = 1) { return NCPoly::e(s); }
NCPoly f(unsigned s = 1) { return NCPoly::f(s); }
NCPoly h(unsigned s = 1) { return NCPoly::h(s); }
GenSymbol E(unsigned s = 1) { return {Gen::e, s}; }
GenSymbol F(unsigned s = 1) { return {Gen::f, s}; }
GenSymbol H(unsigned s = 1) { return {Gen::h, s}; }

}  // namespace

TEST(NormalForm, SingleRules) {
  EXPECT_EQ(normal_form(RawWord{E(), F()}), f() * e() + h());
  EXPECT_EQ(normal_form(RawWord{E(), F()}).str(), "f1*e1 + h1");
  EXPECT_EQ(normal_form(RawWord{E(), H()}).str(), "h1*e1 - 2*e1");
  EXPECT_EQ(normal_form(RawWord{H(), F()}).str(), "f1*h1 - 2*f1");
  EXPECT_EQ(normal_form(RawWord{H(2), E(1)}).str(), "e1*h2");
}

TEST(NormalForm, StrategiesAgree) {
  RawWord w{E(), E(), F(2), H(), F(), E(2), F(), H(2)};
  NCPoly ref = normal_form(w);
  EXPECT_EQ(normal_form(w, RewriteStrategy::rightmost), ref);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(normal_form(w, RewriteStrategy::randomized, seed), ref);
  }
}

TEST(NormalForm, Expressions) {
  RawExpr ex{{RawWord{E(), F()}, CPoly(1)}, {RawWord{F(), E()}, CPoly(-1)}};
  EXPECT_EQ(normal_form(ex), h());
  RawExpr scaled{{RawWord{H()}, X()}, {RawWord{}, Mu0()}};
  EXPECT_EQ(normal_form(scaled), h() * X() + NCPoly(Mu0()));
}

TEST(NcMul, Examples) {
  // e h = h e - 2e, so f e h = f h e - 2 f e.
  EXPECT_EQ((f() * e()) * h(), f() * h() * e() - f() * e() * Rational(2));
  EXPECT_EQ((f() * e()) * h(), normal_form(RawWord{F(), E(), H()}));
  EXPECT_EQ(((f() * e()) * h()).str(), "f1*h1*e1 - 2*f1*e1");
  const NCPoly a = f() * h() + e(2) * X();
  EXPECT_EQ(a * NCPoly(1), a);
  EXPECT_EQ(NCPoly(1) * a, a);
  const NCPoly eff = e() * (f() * f());
  EXPECT_EQ(eff.str(), "f1^2*e1 + 2*f1*h1 - 2*f1");
  EXPECT_EQ(eff, normal_form(RawWord{E(), F(), F()}));
}

TEST(NcMul, HighPowersAgainstReducer) {
  RawWord w;
  for (int i = 0; i < 4; ++i) w.push_back(E());
  for (int i = 0; i < 3; ++i) w.push_back(H());
  for (int i = 0; i < 4; ++i) w.push_back(F());
  EXPECT_EQ(e().pow(4) * h().pow(3) * f().pow(4), normal_form(w));
}

TEST(NcMul, CoefficientsRideAlong) {
  const NCPoly a = e() * (X() - Mu0());
  const NCPoly b = f() * X();
  EXPECT_EQ(a * b, (f() * e() + h()) * (X() * X() - X() * Mu0()));
}

TEST(Brackets, Examples) {
  EXPECT_EQ(commutator(h(), e()), e() * Rational(2));
  EXPECT_EQ(commutator(h(), f()), f() * Rational(-2));
  EXPECT_EQ(commutator(e(), f()), h());
  EXPECT_EQ(anticommutator(h(), e()), h() * e() * Rational(2) - e() * Rational(2));
  const NCPoly a = f() * h() * e(2) + X();
  EXPECT_TRUE(commutator(a, a).is_zero());
  EXPECT_TRUE(commutator(e(1), f(2)).is_zero());
}

TEST(Casimir, NormalForm) {
  const NCPoly c = casimir(1);
  EXPECT_EQ(c, f() * e() * Rational(4) + h() * h() + h() * Rational(2));
  EXPECT_EQ(c.str(), "4*f1*e1 + h1^2 + 2*h1");
  EXPECT_TRUE(commutator(c, e()).is_zero());
  EXPECT_TRUE(commutator(c, f()).is_zero());
  EXPECT_TRUE(commutator(c, h()).is_zero());
  EXPECT_TRUE(commutator(c, h(2)).is_zero());
  EXPECT_FALSE(commutator(h() * h(), e()).is_zero());
}

TEST(Embed, Shifts) {
  EXPECT_EQ(embed(e(1), 1), e(2));
  EXPECT_EQ(embed(f(1) * h(1), 2), f(3) * h(3));
  EXPECT_THROW(embed(e(1), -1), ShiftUnderflow);
  EXPECT_EQ(embed(NCPoly(X()), -5), NCPoly(X()));
  EXPECT_EQ(embed(embed(casimir(1), 3), -2), casimir(2));
}

TEST(NCPoly, Queries) {
  const NCPoly p = f() * h() * e(2) * X() + h(3) * Mu0() + 1;
  EXPECT_EQ(p.max_site(), 3u);
  EXPECT_EQ(p.word_degree(), 3u);
  EXPECT_FALSE(p.is_scalar());
  EXPECT_TRUE(NCPoly(X()).is_scalar());
  EXPECT_EQ(p.degree_in(Var::x), 1u);
  EXPECT_EQ(p.subst(Var::x, CPoly(0)), h(3) * Mu0() + 1);
  EXPECT_EQ((p * X()).divexact(X()), p);
  EXPECT_THROW((p * X()).divexact(X() * X()), NotDivisible);
  EXPECT_EQ(NCPoly().str(), "0");
  EXPECT_EQ(NCPoly(1).str(), "1");
}

TEST(NCPoly, WeightAt) {
  const NCPoly p = f(1) * f(1) * e(1) * e(2);
  const auto& w = p.terms().begin()->first;
  EXPECT_EQ(w.weight_at(1), -2);
  EXPECT_EQ(w.weight_at(2), 2);
  EXPECT_EQ(w.weight_at(3), 0);
  EXPECT_EQ(w.degree(), 4u);
}

TEST(NCPoly, SplitJoinX) {
  const NCPoly p = e() * (X() * X()) - f() * X() + h() * Mu0();
  auto s = split_x(p);
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(s[0], h() * Mu0());
  EXPECT_EQ(s[1], -f());
  EXPECT_EQ(s[2], e());
  EXPECT_EQ(join_x(s), p);
}
