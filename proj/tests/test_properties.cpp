#include <gtest/gtest.h>

#include <random>

#include "reflalg/ncpoly.hpp"
#include "test_util.hpp"

using namespace reflalg;
using reflalg::testutil::random_cpoly;
using reflalg::testutil::random_ncpoly;
using reflalg::testutil::random_word;
using reflalg::testutil::word_product;

TEST(CPolyProperty, RingAxioms) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const CPoly a = random_cpoly(rng, 6), b = random_cpoly(rng, 6), c = random_cpoly(rng, 6);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
  }
}

TEST(CPolyProperty, DivExactInvertsMultiplication) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const CPoly a = random_cpoly(rng, 5);
    CPoly b = random_cpoly(rng, 4);
    if (b.is_zero()) b = CPoly(3);
    ASSERT_EQ(divexact(a * b, b), a) << a << " / " << b;
  }
}

TEST(CPolyProperty, DoubleReflection) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const CPoly p = random_cpoly(rng, 6);
    ASSERT_EQ(p.subst(Var::x, -X()).subst(Var::x, -X()), p);
  }
}

TEST(NcProperty, NormalFormIdempotent) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const RawWord w = random_word(rng, 8, 2);
    const NCPoly once = normal_form(w);
    RawExpr again;
    for (const auto& [word, c] : once.terms()) again.emplace_back(word.letters(), c);
    ASSERT_EQ(normal_form(again), once);
  }
}

// Diamond check: the raw reducer under three strategies, the closed-form
// product, and random parenthesizations must agree.
TEST(NcProperty, Confluence) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const RawWord w = random_word(rng, 8, 2);
    const NCPoly ref = normal_form(w, RewriteStrategy::leftmost);
    ASSERT_EQ(normal_form(w, RewriteStrategy::rightmost), ref);
    ASSERT_EQ(normal_form(w, RewriteStrategy::randomized, rng()), ref);
    ASSERT_EQ(word_product(w), ref);
    if (w.size() >= 2) {
      const std::size_t cut = 1 + rng() % (w.size() - 1);
      const RawWord left(w.begin(), w.begin() + static_cast<long>(cut));
      const RawWord right(w.begin() + static_cast<long>(cut), w.end());
      ASSERT_EQ(normal_form(left) * normal_form(right), ref);
    }
  }
}

TEST(NcProperty, Associativity) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const NCPoly a = random_ncpoly(rng, 3, 2), b = random_ncpoly(rng, 3, 2), c = random_ncpoly(rng, 3, 2);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(NcProperty, Jacobi) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const NCPoly a = random_ncpoly(rng, 3, 2), b = random_ncpoly(rng, 3, 2), c = random_ncpoly(rng, 3, 2);
    ASSERT_TRUE((commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                 commutator(c, commutator(a, b)))
                    .is_zero());
  }
}

TEST(NcProperty, HGrading) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const NCPoly p = word_product(random_word(rng, 7, 3));
    for (const auto& [w, c] : p.terms()) {
      const NCPoly term(w, CPoly(1));
      for (unsigned site = 1; site <= 3; ++site) {
        ASSERT_EQ(commutator(NCPoly::h(site), term), term * Rational(w.weight_at(site)));
      }
    }
  }
}

TEST(NcProperty, CasimirCentral) {
  std::mt19937_64 rng(9);
  for (unsigned site = 1; site <= 3; ++site) {
    for (Gen g : {Gen::f, Gen::h, Gen::e}) {
      ASSERT_TRUE(commutator(casimir(site), NCPoly::gen(g, site)).is_zero());
    }
  }
  for (int i = 0; i < 100; ++i) {
    const NCPoly p = random_ncpoly(rng, 5, 1);
    ASSERT_TRUE(commutator(casimir(1), p).is_zero());
  }
}
