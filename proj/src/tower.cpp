#include "reflalg/tower.hpp"

#include <stdexcept>

#include "reflalg/errors.hpp"

namespace reflalg {

namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

NCPoly xpoly(const CPoly& c) { return NCPoly(c); }

NCPoly at_zero(const NCPoly& p) { return p.subst(Var::x, CPoly(0)); }

std::string indexed(const char* base, unsigned k) { return std::string(base) + "_" + std::to_string(k); }

void project_component(const NCPoly& p, const std::vector<ScalarPoly>& basis,
                       std::vector<NCPoly>& coeffs, const char* what) {
  auto proj = project(split_x(p), std::span<const ScalarPoly>(basis));
  if (!proj.remainder.is_zero()) {
    throw NonzeroRemainder(std::string("extract_generators: ") + what +
                           " leaves Euler remainder " + join_x(proj.remainder).str());
  }
  coeffs = std::move(proj.coefficients);
}

}  // namespace

const NCPoly& TowerLevel::gen(const std::string& name) const {
  auto it = generators.find(name);
  if (it == generators.end()) {
    throw std::out_of_range("level " + std::to_string(level) + " has no generator " + name);
  }
  return it->second;
}

std::vector<std::string> TowerLevel::noncentral_names() const {
  std::vector<std::string> out;
  for (const auto& [name, g] : generators) {
    if (name != "mu") out.push_back(name);
  }
  return out;
}

TowerLevel level0(const std::optional<Rational>& mu0_value) {
  const CPoly mu0 = mu0_value ? CPoly(*mu0_value) : Mu0();
  TowerLevel t;
  t.level = 0;
  t.matrix = SpectralMatrix::of2(xpoly(X() - mu0), {}, {}, xpoly(-X() - mu0));
  t.components = Components{0, NCPoly(mu0), NCPoly(1), {}, {}};
  t.generators = {{"mu", NCPoly(mu0)}};
  t.delta = NCPoly(mu0 * mu0 - X() * X());
  return t;
}

Components components_from_matrix(const SpectralMatrix& m, unsigned level) {
  if (m.dim() != 2) throw DimensionMismatch("components_from_matrix: expects a 2x2 matrix");
  Components c;
  c.level = level;
  c.h = (m(0, 0) + m(1, 1)) * (-kHalf);
  c.hbar = ((m(0, 0) - m(1, 1)) * kHalf).divexact(X());
  c.e = m(1, 0);
  c.f = m(0, 1);
  if (!at_zero(c.e).is_zero()) throw ZeroValueViolation("components_from_matrix: e(0) != 0");
  if (!at_zero(c.f).is_zero()) throw ZeroValueViolation("components_from_matrix: f(0) != 0");
  return c;
}

SpectralMatrix matrix_from_components(const Components& c) {
  const NCPoly xhbar = c.hbar * X();
  return SpectralMatrix::of2(xhbar - c.h, c.f, c.e, -xhbar - c.h);
}

Components dressed_components(const Components& c, unsigned new_site, HbarCrossTerm cross) {
  const NCPoly h = NCPoly::h(new_site);
  const NCPoly e = NCPoly::e(new_site);
  const NCPoly f = NCPoly::f(new_site);
  const NCPoly cas = casimir(new_site);
  const NCPoly one(1);
  const NCPoly h2 = h * h;
  const NCPoly hf = anticommutator(h, f);
  const NCPoly he = anticommutator(h, e);
  const CPoly xx1 = X() * (X() - CPoly(1));
  const CPoly x1 = X() - CPoly(1);

  Components out;
  out.level = c.level + 1;
  out.h = (c.h + c.hbar * h) * xx1 + (c.f * e + c.e * f) * x1 + c.h * (one + cas) * kQuarter;

  NCPoly bracket = h2 * Rational(2) + one - cas;
  NCPoly hbar = c.hbar * xx1;
  if (cross == HbarCrossTerm::h_times_h) {
    hbar += c.hbar * bracket * kQuarter + c.h * h;
  } else {
    hbar += c.hbar * (bracket + h * Rational(4)) * kQuarter;
  }
  hbar += (c.e * hf + c.f * he).divexact(X()) * kQuarter;
  out.hbar = std::move(hbar);

  const NCPoly one_minus_h2 = one - h2;
  out.e = c.e * xx1 + c.h * e * (X() * Rational(2)) + c.hbar * he * (X() * kHalf) + c.f * e * e +
          c.e * one_minus_h2 * kQuarter;
  out.f = c.f * xx1 + c.h * f * (X() * Rational(2)) + c.hbar * hf * (X() * kHalf) + c.e * f * f +
          c.f * one_minus_h2 * kQuarter;
  return out;
}

GeneratorMap extract_generators(const Components& c, const EulerTable& table) {
  const unsigned n = c.level;
  if (table.max_degree() < 2 * n) throw std::invalid_argument("extract_generators: table too small");

  std::vector<ScalarPoly> even;
  for (unsigned k = 0; k <= n; ++k) even.push_back(table.euler(2 * (n - k)));
  std::vector<ScalarPoly> f_basis;
  std::vector<ScalarPoly> e_basis;
  for (unsigned k = 0; k < n; ++k) {
    ScalarPoly r = table.reduced_even(n - k);
    e_basis.push_back(ScalarPoly() - r);
    f_basis.push_back(std::move(r));
  }

  GeneratorMap g;
  std::vector<NCPoly> coeffs;

  project_component(c.hbar, even, coeffs, "hbar");
  if (coeffs[0] != NCPoly(1)) {
    throw NotMonic("extract_generators: hbar top coefficient is " + coeffs[0].str());
  }
  for (unsigned k = 0; k < n; ++k) g[indexed("hbar", 2 * k)] = coeffs[k + 1];

  project_component(c.h, even, coeffs, "h");
  for (unsigned k = 0; k < n; ++k) g[indexed("h", 2 * k)] = coeffs[k];
  g["mu"] = coeffs[n];
  if (at_zero(c.h) != g["mu"]) throw NonzeroRemainder("extract_generators: mu != h(0)");

  project_component(c.f, f_basis, coeffs, "f");
  for (unsigned k = 0; k < n; ++k) g[indexed("f", 2 * k + 1)] = coeffs[k];
  project_component(c.e, e_basis, coeffs, "e");
  for (unsigned k = 0; k < n; ++k) g[indexed("e", 2 * k + 1)] = coeffs[k];
  return g;
}

NCPoly delta_of(const SpectralMatrix& b) {
  if (b.dim() != 2) throw DimensionMismatch("delta_of: expects a 2x2 matrix");
  const SpectralMatrix p = b * b.subst(Var::x, -X());
  if (!p(0, 1).is_zero() || !p(1, 0).is_zero()) {
    throw NotScalar("delta_of: off-diagonal entries of B(x)B(-x) are nonzero");
  }
  if (p(0, 0) != p(1, 1)) throw NotScalar("delta_of: diagonal entries of B(x)B(-x) differ");
  return p(0, 0);
}

TowerLevel dress(const TowerLevel& t, const EulerTable& table) {
  const unsigned site = t.level + 1;
  const SpectralMatrix l = l_matrix(site);
  TowerLevel out;
  out.level = site;
  out.matrix = l * t.matrix * l;
  out.components = components_from_matrix(out.matrix, site);
  out.generators = extract_generators(out.components, table);
  out.delta = delta_of(out.matrix);
  return out;
}

std::vector<TowerLevel> build_tower(unsigned max_level, const EulerTable& table,
                                    const std::optional<Rational>& mu0_value) {
  std::vector<TowerLevel> levels{level0(mu0_value)};
  for (unsigned n = 1; n <= max_level; ++n) levels.push_back(dress(levels.back(), table));
  return levels;
}

std::vector<std::pair<std::string, NCPoly>> is_central(const NCPoly& z, const TowerLevel& t) {
  std::vector<std::pair<std::string, NCPoly>> out;
  for (const auto& name : t.noncentral_names()) out.emplace_back(name, commutator(z, t.gen(name)));
  return out;
}

NCPoly l_determinant(unsigned site) {
  return NCPoly(-X() * X()) + (NCPoly(1) + casimir(site)) * kQuarter;
}

}  // namespace reflalg
