#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflalg/euler.hpp"
#include "reflalg/ncpoly.hpp"
#include "reflalg/spectral.hpp"

namespace reflalg {

/// The four component polynomials of a truncated B-matrix,
///   B = [[x*hbar - h, f], [e, -x*hbar - h]],
/// each a polynomial in x (carried in the coefficients) over U(sl2)^{(x)N}.
struct Components {
  unsigned level = 0;
  NCPoly h;
  NCPoly hbar;
  NCPoly e;
  NCPoly f;

  friend bool operator==(const Components&, const Components&) = default;
};

using GeneratorMap = std::map<std::string, NCPoly>;

/// Level-N truncated reflection matrix realized in U(sl2)^{(x)N}.
struct TowerLevel {
  unsigned level = 0;
  SpectralMatrix matrix;
  Components components;
  /// mu, h_{2n}, hbar_{2n}, e_{2n+1}, f_{2n+1} for n = 0..N-1.
  GeneratorMap generators;
  /// delta(x) with B(x)B(-x) = delta(x) I2.
  NCPoly delta;

  const NCPoly& gen(const std::string& name) const;
  /// Generator names other than mu, in map order.
  std::vector<std::string> noncentral_names() const;
};

/// B^(0)(x) = diag(x - mu0, -x - mu0). With a value, mu0 is specialized to it;
/// without, it stays the symbolic indeterminate.
TowerLevel level0(const std::optional<Rational>& mu0_value = std::nullopt);

/// L(x) B(x) L(x) with the L generators on site N+1, then re-extraction.
TowerLevel dress(const TowerLevel& t, const EulerTable& table);

/// Builds levels 0..max_level.
std::vector<TowerLevel> build_tower(unsigned max_level, const EulerTable& table,
                                    const std::optional<Rational>& mu0_value = std::nullopt);

/// Reads h, hbar, e, f off a 2x2 matrix of truncated shape. Throws
/// NotDivisible if (B11-B22)/2 is not divisible by x and ZeroValueViolation
/// if e(0) or f(0) is nonzero.
Components components_from_matrix(const SpectralMatrix& m, unsigned level);

/// Inverse of components_from_matrix.
SpectralMatrix matrix_from_components(const Components& c);

/// Which factor multiplies the new site's h in the linear term of the hbar
/// recursion. h_times_h is what L B L actually produces; hbar_times_h is the
/// variant with that term folded into the hbar (x) (2h^2+4h+1-c)/4 bracket.
enum class HbarCrossTerm { h_times_h, hbar_times_h };

/// Closed-form component recursion for L(x) B(x) L(x) with L on `new_site`.
/// The 1/(4x) term is an exact division by x (NotDivisible on failure).
Components dressed_components(const Components& c, unsigned new_site,
                              HbarCrossTerm cross = HbarCrossTerm::h_times_h);

/// Projects the components onto the Euler bases. Throws NonzeroRemainder when
/// a component leaves the span, NotMonic when hbar is not monic of degree 2N.
GeneratorMap extract_generators(const Components& c, const EulerTable& table);

/// B(x)B(-x); throws NotScalar unless it is delta(x) I2.
NCPoly delta_of(const SpectralMatrix& b);

/// [z, g] for every non-central generator g of the level.
std::vector<std::pair<std::string, NCPoly>> is_central(const NCPoly& z, const TowerLevel& t);

/// -x^2 + (1 + c_site)/4, the scalar in L(x)L(-x).
NCPoly l_determinant(unsigned site);

}  // namespace reflalg
