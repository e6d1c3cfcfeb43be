#include "reflalg/euler.hpp"

#include <stdexcept>

namespace reflalg {

namespace {

Rational fact(unsigned n) { return Rational(factorial(n)); }

ScalarPoly monomial_x(unsigned n, const Rational& c) {
  std::vector<Rational> v(n + 1);
  v[n] = c;
  return ScalarPoly(std::move(v));
}

ScalarPoly scale(const ScalarPoly& p, const Rational& c) {
  std::vector<Rational> v = p.coeffs();
  for (auto& r : v) r *= c;
  return ScalarPoly(std::move(v));
}

const CPoly& x_times_x_minus_one() {
  static const CPoly v = X() * (X() - CPoly(1));
  return v;
}

}  // namespace

EulerTable EulerTable::build(unsigned max_degree) {
  EulerTable t;
  t.max_degree_ = max_degree;

  // 2e^{xw}/(e^w+1) * (e^w+1)/2 = e^{xw}; with a_n = E_n/n! and
  // (e^w+1)/2 = 1 + sum_{k>=1} w^k/(2 k!):
  //   a_n = x^n/n! - sum_{k=1}^{n} a_{n-k} / (2 k!).
  std::vector<ScalarPoly> a;
  for (unsigned n = 0; n <= max_degree; ++n) {
    ScalarPoly an = monomial_x(n, Rational(1) / fact(n));
    for (unsigned k = 1; k <= n; ++k) an -= scale(a[n - k], Rational(1) / (Rational(2) * fact(k)));
    a.push_back(std::move(an));
  }
  for (unsigned n = 0; n <= max_degree; ++n) t.polys_.push_back(scale(a[n], fact(n)));

  // w/(e^w-1) * (e^w-1)/w = 1 with (e^w-1)/w = sum_k w^k/(k+1)!.
  std::vector<Rational> b;
  for (unsigned n = 0; n <= max_degree; ++n) {
    Rational bn = n == 0 ? Rational(1) : Rational(0);
    for (unsigned k = 1; k <= n; ++k) bn -= b[n - k] / fact(k + 1);
    b.push_back(bn);
  }
  for (unsigned n = 0; n <= max_degree; ++n) t.bernoullis_.push_back(b[n] * fact(n));
  return t;
}

CPoly EulerTable::euler_cpoly(unsigned n) const { return to_cpoly(euler(n)); }

ScalarPoly EulerTable::reduced_even(unsigned k) const {
  if (k == 0) throw std::invalid_argument("reduced_even: k must be >= 1");
  CPoly q = divexact(euler_cpoly(2 * k), X() - CPoly(1));
  return to_scalar_poly(q * Rational(2));
}

ScalarPoly to_scalar_poly(const CPoly& p) {
  std::vector<Rational> v(p.degree_in(Var::x) + 1);
  for (const auto& t : p.terms()) {
    if (t.mono.degree() != t.mono.exponent(Var::x)) {
      throw std::invalid_argument("to_scalar_poly: polynomial is not univariate in x: " + p.str());
    }
    v[t.mono.exponent(Var::x)] = t.coeff;
  }
  return ScalarPoly(std::move(v));
}

CPoly to_cpoly(const ScalarPoly& p, Var v) {
  std::vector<CPoly::Term> terms;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (!p.coeffs()[k].is_zero()) {
      terms.push_back({Monomial::of(v, static_cast<unsigned>(k)), p.coeffs()[k]});
    }
  }
  return CPoly::from_terms(std::move(terms));
}

CPoly check_prE(unsigned n, const EulerTable& table) {
  if (table.max_degree() < 2 * n + 2) throw std::invalid_argument("check_prE: table too small");
  CPoly lhs = x_times_x_minus_one() * table.euler_cpoly(2 * n);
  CPoly rhs = table.euler_cpoly(2 * n + 2);
  Rational pref = Rational(2) * fact(2 * n);
  for (unsigned k = 1; k <= n; ++k) {
    Rational one_minus = Rational(1) - Rational(mpz_class(mpz_class(1) << (2 * k)));
    Rational c = pref * one_minus * table.bernoulli(2 * k) / (fact(2 * n - 2 * k + 1) * fact(2 * k));
    rhs -= table.euler_cpoly(2 * n - 2 * k + 2) * c;
  }
  return lhs - rhs;
}

bool FunctionalRelationResidual::all_zero() const {
  for (const auto& c : series) {
    if (!c.is_zero()) return false;
  }
  for (const auto& c : recurrence) {
    if (!c.is_zero()) return false;
  }
  return true;
}

FunctionalRelationResidual check_functional_relation(unsigned order, const EulerTable& table) {
  if (order < 2) throw std::invalid_argument("check_functional_relation: order must be >= 2");
  if (table.max_degree() < order + 2) {
    throw std::invalid_argument("check_functional_relation: table too small");
  }
  // Normalized series coefficients: f = sum F_n w^n, g = sum b_n w^n.
  std::vector<CPoly> F;
  std::vector<Rational> b;
  for (unsigned n = 0; n <= order + 2; ++n) {
    F.push_back(table.euler_cpoly(n) * (Rational(1) / fact(n)));
    b.push_back(table.bernoulli(n) / fact(n));
  }
  // (2/w)(g(w) - g(2w)) = sum_j G_j w^j with G_j = 2(1 - 2^{j+1}) b_{j+1}.
  std::vector<Rational> G;
  for (unsigned j = 0; j + 1 <= order + 2; ++j) {
    G.push_back(Rational(2) * (Rational(1) - Rational(mpz_class(mpz_class(1) << (j + 1)))) * b[j + 1]);
  }

  FunctionalRelationResidual out;
  for (unsigned m = 0; m <= order; ++m) {
    CPoly c = F[m + 2] * Rational(static_cast<long>((m + 2) * (m + 1)));
    c += F[m + 1] * Rational(static_cast<long>(m + 1));
    c -= x_times_x_minus_one() * F[m];
    for (unsigned j = 0; j <= m; ++j) {
      c -= F[m - j + 1] * (G[j] * Rational(static_cast<long>(m - j + 1)));
    }
    out.series.push_back(std::move(c));
  }

  for (unsigned n = 0; n + 2 <= order; ++n) {
    CPoly r = table.euler_cpoly(n + 2) + table.euler_cpoly(n + 1) -
              x_times_x_minus_one() * table.euler_cpoly(n);
    Rational pref = Rational(2) * fact(n);
    for (unsigned k = 0; k <= n; ++k) {
      Rational one_minus = Rational(1) - Rational(mpz_class(mpz_class(1) << (k + 1)));
      Rational c = pref * one_minus * table.bernoulli(k + 1) / (fact(n - k) * fact(k + 1));
      r -= table.euler_cpoly(n - k + 1) * c;
    }
    out.recurrence.push_back(std::move(r));
  }
  return out;
}

}  // namespace reflalg
