#pragma once

#include <span>
#include <vector>

#include "reflalg/cpoly.hpp"
#include "reflalg/errors.hpp"
#include "reflalg/unipoly.hpp"

namespace reflalg {

/// Euler polynomials E_n(x) and Bernoulli numbers B_n up to a fixed degree,
/// obtained by expanding 2e^{xw}/(e^w+1) and w/(e^w-1) as power series in w.
class EulerTable {
 public:
  static EulerTable build(unsigned max_degree);

  unsigned max_degree() const { return max_degree_; }
  const ScalarPoly& euler(unsigned n) const { return polys_.at(n); }
  /// E_n as a polynomial in the indeterminate x.
  CPoly euler_cpoly(unsigned n) const;
  const Rational& bernoulli(unsigned n) const { return bernoullis_.at(n); }

  /// 2 E_{2k}(x) / (x - 1) for k >= 1 (exact division; throws NotDivisible
  /// otherwise). Degree 2k - 1, leading coefficient 2.
  ScalarPoly reduced_even(unsigned k) const;

 private:
  unsigned max_degree_ = 0;
  std::vector<ScalarPoly> polys_;
  std::vector<Rational> bernoullis_;
};

/// Converts a polynomial that only involves x into a ScalarPoly.
ScalarPoly to_scalar_poly(const CPoly& p);
CPoly to_cpoly(const ScalarPoly& p, Var v = Var::x);

/// Residual of x(x-1)E_{2n} = E_{2n+2} - 2(2n)! sum_{k=1}^{n}
/// (1-2^{2k}) B_{2k} / ((2n-2k+1)!(2k)!) E_{2n-2k+2}. Zero iff it holds.
CPoly check_prE(unsigned n, const EulerTable& table);

struct FunctionalRelationResidual {
  /// Coefficients of w^0..w^order of f'' + f' - x(x-1)f - (2/w)(g(w)-g(2w))f'.
  std::vector<CPoly> series;
  /// Residual of the derived three-term recurrence for n = 0..order-2.
  std::vector<CPoly> recurrence;

  bool all_zero() const;
};

/// Requires order >= 2 and table.max_degree() >= order + 2.
FunctionalRelationResidual check_functional_relation(unsigned order, const EulerTable& table);

template <class A>
struct Projection {
  std::vector<A> coefficients;
  UniPoly<A> remainder;
};

/// Greedy triangular elimination of p against a basis given in strictly
/// descending degree order. Each basis polynomial must have an invertible
/// leading coefficient. sum_i coefficients[i] * basis[i] + remainder == p.
template <class A>
Projection<A> project(UniPoly<A> p, std::span<const ScalarPoly> basis) {
  Projection<A> out;
  out.coefficients.assign(basis.size(), A{});
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ScalarPoly& b = basis[i];
    if (i > 0 && b.degree() >= basis[i - 1].degree()) {
      throw std::invalid_argument("project: basis degrees must be strictly descending");
    }
    if (p.is_zero() || p.degree() < b.degree()) continue;
    if (p.degree() > b.degree()) break;
    A c = p.leading() * (Rational(1) / b.leading());
    p -= UniPoly<A>::times(c, b);
    out.coefficients[i] = std::move(c);
  }
  out.remainder = std::move(p);
  return out;
}

/// Projection onto {E_d : d in degrees}, degrees strictly descending.
template <class A>
Projection<A> euler_project(const UniPoly<A>& p, std::span<const unsigned> degrees,
                            const EulerTable& table) {
  std::vector<ScalarPoly> basis;
  basis.reserve(degrees.size());
  for (unsigned d : degrees) basis.push_back(table.euler(d));
  return project(p, std::span<const ScalarPoly>(basis));
}

}  // namespace reflalg
