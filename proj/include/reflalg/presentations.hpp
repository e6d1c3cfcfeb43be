#pragma once

#include <string>
#include <vector>

#include "reflalg/ncpoly.hpp"
#include "reflalg/tower.hpp"

namespace reflalg {

/// One displayed identity lhs = rhs, named so that reports point at it.
struct Relation {
  std::string label;
  NCPoly lhs;
  NCPoly rhs;
};

struct RelationResult {
  std::string label;
  NCPoly residual;  // lhs - rhs

  bool ok() const { return residual.is_zero(); }
  std::size_t residual_terms() const { return residual.size(); }
  /// Largest word degree in the residual; 0 when zero.
  unsigned max_degree() const { return residual.word_degree(); }
};

struct SuiteReport {
  std::string name;
  std::vector<RelationResult> results;

  bool all_zero() const;
  const RelationResult& at(const std::string& label) const;
};

/// Evaluates every relation. Labels must be unique.
SuiteReport evaluate_suite(const std::string& name, const std::vector<Relation>& relations);

/// [H,E] = 2E, [H,F] = -2F, [E,[E,[E,F]]] = -12 EHE, [F,[F,[F,E]]] = 12 FHF.
SuiteReport serre_check(const NCPoly& H, const NCPoly& E, const NCPoly& F);

/// Named N=1 elements built from the level-1 generators.
struct LevelOneElements {
  NCPoly h0, hbar0, e1, f1, mu;
  NCPoly gamma;   // h0^2/2 - hbar0
  NCPoly delta2;  // 2{e1,f1} - h0^4/4 + (gamma-1) h0^2 + 2 mu h0
  NCPoly X, Y;    // Hahn generators
};
LevelOneElements level_one_elements(const TowerLevel& level1);

/// Higgs relations, including the gamma form of [e1,f1].
SuiteReport check_higgs_n1(const TowerLevel& level1);

/// Centrality of mu, gamma, delta_2 against the level-1 generators, and the
/// closed-form realization values of gamma and delta_2.
SuiteReport check_center_n1(const TowerLevel& level1);

/// Closed-form U(sl2) realization of the level-1 generators and of mu,
/// gamma, delta_2 in terms of h, e, f, the Casimir and mu0 (site 1).
SuiteReport check_realization_n1(const TowerLevel& level1);

/// Hahn relations for X = h0/2, Y = -(hbar0+e1+f1)/2, the inverse map and the
/// equality of the two expressions for Y.
SuiteReport hahn_check(const TowerLevel& level1);

struct LevelTwoElements {
  NCPoly h0, h2, hbar0, hbar2, e1, e3, f1, f3, mu;
  NCPoly gamma1, gamma2, delta2, delta4;
};
LevelTwoElements level_two_elements(const TowerLevel& level2);

/// All N=2 commutation relations, evaluated with factors in the written order,
/// plus centrality of gamma_1 and gamma_2.
SuiteReport check_n2(const TowerLevel& level2);

struct CenterN2Report {
  SuiteReport centrality;
  /// [x^2] delta^(2)(x) - delta_2 and [x^4] delta^(2)(x) - delta_4.
  NCPoly discrepancy_x2;
  NCPoly discrepancy_x4;
  /// delta_2 with 2 mu (h_2 - hbar_0) replaced by 2 mu h_2: centrality and
  /// equality with [x^2] delta^(2)(x).
  SuiteReport variant;
};
CenterN2Report check_center_n2(const TowerLevel& level2);

}  // namespace reflalg
