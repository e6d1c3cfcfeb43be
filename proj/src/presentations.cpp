#include "reflalg/presentations.hpp"

#include <set>
#include <stdexcept>

namespace reflalg {

namespace {

const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

NCPoly br(const NCPoly& a, const NCPoly& b) { return commutator(a, b); }
NCPoly ac(const NCPoly& a, const NCPoly& b) { return anticommutator(a, b); }
NCPoly sc(long v) { return NCPoly(Rational(v)); }

void add_centrality(std::vector<Relation>& rels, const std::string& name, const NCPoly& z,
                    const TowerLevel& t) {
  for (auto& [g, res] : is_central(z, t)) {
    rels.push_back({"[" + name + "," + g + "] = 0", res, NCPoly{}});
  }
}

}  // namespace

bool SuiteReport::all_zero() const {
  for (const auto& r : results) {
    if (!r.ok()) return false;
  }
  return true;
}

const RelationResult& SuiteReport::at(const std::string& label) const {
  for (const auto& r : results) {
    if (r.label == label) return r;
  }
  throw std::out_of_range("suite " + name + " has no relation '" + label + "'");
}

SuiteReport evaluate_suite(const std::string& name, const std::vector<Relation>& relations) {
  SuiteReport out{name, {}};
  std::set<std::string> seen;
  for (const auto& r : relations) {
    if (!seen.insert(r.label).second) {
      throw std::invalid_argument("suite " + name + ": duplicate label '" + r.label + "'");
    }
    out.results.push_back({r.label, r.lhs - r.rhs});
  }
  return out;
}

SuiteReport serre_check(const NCPoly& H, const NCPoly& E, const NCPoly& F) {
  return evaluate_suite(
      "serre", {
                   {"[H,E] = 2E", br(H, E), E * Rational(2)},
                   {"[H,F] = -2F", br(H, F), F * Rational(-2)},
                   {"[E,[E,[E,F]]] = -12EHE", br(E, br(E, br(E, F))), E * H * E * Rational(-12)},
                   {"[F,[F,[F,E]]] = 12FHF", br(F, br(F, br(F, E))), F * H * F * Rational(12)},
               });
}

LevelOneElements level_one_elements(const TowerLevel& level1) {
  if (level1.level != 1) throw std::invalid_argument("level_one_elements: expects level 1");
  LevelOneElements m;
  m.h0 = level1.gen("h_0");
  m.hbar0 = level1.gen("hbar_0");
  m.e1 = level1.gen("e_1");
  m.f1 = level1.gen("f_1");
  m.mu = level1.gen("mu");
  const NCPoly h0sq = m.h0 * m.h0;
  m.gamma = h0sq * kHalf - m.hbar0;
  m.delta2 = ac(m.e1, m.f1) * Rational(2) - h0sq * h0sq * kQuarter + (m.gamma - sc(1)) * h0sq +
             m.mu * m.h0 * Rational(2);
  m.X = m.h0 * kHalf;
  m.Y = (m.hbar0 + m.e1 + m.f1) * (-kHalf);
  return m;
}

SuiteReport check_higgs_n1(const TowerLevel& level1) {
  const auto m = level_one_elements(level1);
  const NCPoly h0cube = m.h0 * m.h0 * m.h0;
  return evaluate_suite(
      "higgs_n1",
      {
          {"[h_0,e_1] = 2e_1", br(m.h0, m.e1), m.e1 * Rational(2)},
          {"[h_0,f_1] = -2f_1", br(m.h0, m.f1), m.f1 * Rational(-2)},
          {"[e_1,f_1] = -h_0 hbar_0 + mu", br(m.e1, m.f1), -(m.h0 * m.hbar0) + m.mu},
          {"[hbar_0,e_1] = {h_0,e_1}", br(m.hbar0, m.e1), ac(m.h0, m.e1)},
          {"[hbar_0,f_1] = -{h_0,f_1}", br(m.hbar0, m.f1), -ac(m.h0, m.f1)},
          {"[h_0,hbar_0] = 0", br(m.h0, m.hbar0), NCPoly{}},
          {"[e_1,f_1] = gamma h_0 - h_0^3/2 + mu", br(m.e1, m.f1),
           m.gamma * m.h0 - h0cube * kHalf + m.mu},
      });
}

SuiteReport check_center_n1(const TowerLevel& level1) {
  const auto m = level_one_elements(level1);
  const NCPoly c = casimir(1);
  const NCPoly mu0(Mu0());
  std::vector<Relation> rels;
  add_centrality(rels, "mu", m.mu, level1);
  add_centrality(rels, "gamma", m.gamma, level1);
  add_centrality(rels, "delta_2", m.delta2, level1);
  rels.push_back({"gamma = mu0^2/2 - 1/4 + c/4", m.gamma,
                  mu0 * mu0 * kHalf - NCPoly(kQuarter) + c * kQuarter});
  const NCPoly mu0sq = mu0 * mu0;
  rels.push_back({"delta_2 = (mu0^4 - mu0^2(3+c) - c)/4", m.delta2,
                  (mu0sq * mu0sq - mu0sq * (sc(3) + c) - c) * kQuarter});
  return evaluate_suite("center_n1", rels);
}

SuiteReport check_realization_n1(const TowerLevel& level1) {
  const auto m = level_one_elements(level1);
  const NCPoly h = NCPoly::h(1);
  const NCPoly e = NCPoly::e(1);
  const NCPoly f = NCPoly::f(1);
  const NCPoly c = casimir(1);
  const NCPoly mu0(Mu0());
  const NCPoly mu0sq = mu0 * mu0;
  return evaluate_suite(
      "realization_n1",
      {
          {"h_0 = h + mu0", m.h0, h + mu0},
          {"hbar_0 = h^2/2 + mu0 h + 1/4 - c/4", m.hbar0,
           h * h * kHalf + mu0 * h + NCPoly(kQuarter) - c * kQuarter},
          {"e_1 = -mu0 e - {h,e}/4", m.e1, -(mu0 * e) - ac(h, e) * kQuarter},
          {"f_1 = mu0 f + {h,f}/4", m.f1, mu0 * f + ac(h, f) * kQuarter},
          {"mu = mu0 (c+1)/4", m.mu, mu0 * (c + sc(1)) * kQuarter},
          {"gamma = mu0^2/2 - 1/4 + c/4", m.gamma, mu0sq * kHalf - NCPoly(kQuarter) + c * kQuarter},
          {"delta_2 = (mu0^4 - mu0^2(3+c) - c)/4", m.delta2,
           (mu0sq * mu0sq - mu0sq * (sc(3) + c) - c) * kQuarter},
      });
}

SuiteReport hahn_check(const TowerLevel& level1) {
  const auto m = level_one_elements(level1);
  const NCPoly& X = m.X;
  const NCPoly& Y = m.Y;
  const NCPoly XY = br(X, Y);
  const NCPoly base = m.gamma * kHalf - X * X - Y;
  const NCPoly y_alt =
      (m.h0 * m.h0 - m.gamma * Rational(2) + m.e1 * Rational(2) + m.f1 * Rational(2)) * (-kQuarter);
  return evaluate_suite("hahn", {
                                    {"[[X,Y],Y] = {X,Y} + mu/2", br(XY, Y), ac(X, Y) + m.mu * kHalf},
                                    {"[X,[X,Y]] = X^2 + Y - gamma/2", br(X, XY),
                                     X * X + Y - m.gamma * kHalf},
                                    {"e_1 = gamma/2 - X^2 - Y - [X,Y]", m.e1, base - XY},
                                    {"f_1 = gamma/2 - X^2 - Y + [X,Y]", m.f1, base + XY},
                                    {"h_0 = 2X", m.h0, X * Rational(2)},
                                    {"-(h_0^2 - 2gamma + 2e_1 + 2f_1)/4 = Y", y_alt, Y},
                                });
}

LevelTwoElements level_two_elements(const TowerLevel& level2) {
  if (level2.level != 2) throw std::invalid_argument("level_two_elements: expects level 2");
  LevelTwoElements m;
  m.h0 = level2.gen("h_0");
  m.h2 = level2.gen("h_2");
  m.hbar0 = level2.gen("hbar_0");
  m.hbar2 = level2.gen("hbar_2");
  m.e1 = level2.gen("e_1");
  m.e3 = level2.gen("e_3");
  m.f1 = level2.gen("f_1");
  m.f3 = level2.gen("f_3");
  m.mu = level2.gen("mu");
  const NCPoly h0sq = m.h0 * m.h0;
  m.gamma1 = m.hbar0 - h0sq * kHalf;
  m.gamma2 = m.hbar2 - m.h0 * m.h2 +
             h0sq * (sc(1) + h0sq * Rational(1, 8) + m.gamma1 * kHalf) - ac(m.e1, m.f1);
  const NCPoly h0_minus_h2 = m.h0 - m.h2;
  m.delta2 = ac(m.e3 - m.e1, m.f3 - m.f1) * Rational(2) - h0_minus_h2 * h0_minus_h2 -
             m.hbar2 * m.hbar2 + m.mu * (m.h2 - m.hbar0) * Rational(2);
  m.delta4 = ac(m.e1, m.f3) * Rational(2) + ac(m.e3, m.f1) * Rational(2) -
             ac(m.e1, m.f1) * Rational(6) +
             m.h0 * (m.h0 * Rational(2) - m.h2 * Rational(2) + m.mu) * Rational(2) + m.h2 * m.h2 +
             m.hbar0 * (m.hbar0 - m.hbar2 * Rational(2) - sc(2));
  return m;
}

SuiteReport check_n2(const TowerLevel& level2) {
  const auto m = level_two_elements(level2);
  const NCPoly two(2);
  std::vector<Relation> rels = {
      {"[h_0,e_1] = 2e_1", br(m.h0, m.e1), m.e1 * Rational(2)},
      {"[h_0,f_1] = -2f_1", br(m.h0, m.f1), m.f1 * Rational(-2)},
      {"[e_1,f_1] = h_2 - h_0 hbar_0", br(m.e1, m.f1), m.h2 - m.h0 * m.hbar0},
      {"[h_0,h_2] = 0", br(m.h0, m.h2), NCPoly{}},
      {"[h_2,e_1] = 2e_3", br(m.h2, m.e1), m.e3 * Rational(2)},
      {"[h_2,f_1] = -2f_3", br(m.h2, m.f1), m.f3 * Rational(-2)},
      {"[h_0,e_3] = 2e_3", br(m.h0, m.e3), m.e3 * Rational(2)},
      {"[h_0,f_3] = -2f_3", br(m.h0, m.f3), m.f3 * Rational(-2)},
      {"[e_1,e_3] = 0", br(m.e1, m.e3), NCPoly{}},
      {"[f_1,f_3] = 0", br(m.f1, m.f3), NCPoly{}},
      {"[e_1,f_3] = h_2 - h_0(hbar_0 + hbar_2) + mu", br(m.e1, m.f3),
       m.h2 - m.h0 * (m.hbar0 + m.hbar2) + m.mu},
      {"[e_3,f_1] = h_2 - h_0(hbar_0 + hbar_2) + mu", br(m.e3, m.f1),
       m.h2 - m.h0 * (m.hbar0 + m.hbar2) + m.mu},
      {"[e_1,f_3] = [e_3,f_1]", br(m.e1, m.f3), br(m.e3, m.f1)},
      {"[h_2,e_3] = 2hbar_0(e_3 - e_1) - 2hbar_2 e_1 + 2e_3", br(m.h2, m.e3),
       two * m.hbar0 * (m.e3 - m.e1) - two * m.hbar2 * m.e1 + two * m.e3},
      {"[h_2,f_3] = 2hbar_2 f_1 + 2hbar_0(f_1 - f_3) - 2f_3", br(m.h2, m.f3),
       two * m.hbar2 * m.f1 + two * m.hbar0 * (m.f1 - m.f3) - two * m.f3},
      {"[e_3,f_3] = h_2 - h_0 hbar_0 - hbar_2(h_0 + h_2) - 2f_1 e_3 + 2f_3 e_1 + mu(1 + hbar_0)",
       br(m.e3, m.f3),
       m.h2 - m.h0 * m.hbar0 - m.hbar2 * (m.h0 + m.h2) - two * m.f1 * m.e3 + two * m.f3 * m.e1 +
           m.mu * (sc(1) + m.hbar0)},
  };
  add_centrality(rels, "gamma_1", m.gamma1, level2);
  add_centrality(rels, "gamma_2", m.gamma2, level2);
  return evaluate_suite("n2", rels);
}

CenterN2Report check_center_n2(const TowerLevel& level2) {
  const auto m = level_two_elements(level2);
  std::vector<Relation> rels;
  add_centrality(rels, "delta_2", m.delta2, level2);
  add_centrality(rels, "delta_4", m.delta4, level2);
  const auto by_x = split_x(level2.delta);
  // Same as delta_2 with the mu term replaced by 2 mu h_2.
  const NCPoly variant = m.delta2 + m.mu * m.hbar0 * Rational(2);
  std::vector<Relation> alt;
  add_centrality(alt, "delta_2'", variant, level2);
  alt.push_back({"[x^2] delta^(2)(x) = delta_2'", by_x[2], variant});
  return {evaluate_suite("center_n2", rels), by_x[2] - m.delta2, by_x[4] - m.delta4,
          evaluate_suite("center_n2_variant", alt)};
}

}  // namespace reflalg
