#pragma once

#include <random>
#include <vector>

#include "reflalg/cpoly.hpp"
#include "reflalg/ncpoly.hpp"

namespace reflalg::testutil {

inline CPoly random_cpoly(std::mt19937_64& rng, unsigned max_degree, unsigned max_terms = 5) {
  std::uniform_int_distribution<int> nterms(0, static_cast<int>(max_terms));
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> var(0, 3);
  std::uniform_int_distribution<int> deg(0, static_cast<int>(max_degree));
  CPoly p;
  for (int t = nterms(rng); t > 0; --t) {
    std::array<unsigned, 4> e{};
    for (int d = deg(rng); d > 0; --d) ++e[static_cast<std::size_t>(var(rng))];
    p += CPoly(Monomial::from_exponents(e), Rational(coef(rng), den(rng)));
  }
  return p;
}

inline RawWord random_word(std::mt19937_64& rng, unsigned max_len, unsigned sites) {
  std::uniform_int_distribution<int> len(0, static_cast<int>(max_len));
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> site(1, static_cast<int>(sites));
  RawWord w;
  for (int n = len(rng); n > 0; --n) {
    w.push_back({static_cast<Gen>(kind(rng)), static_cast<unsigned>(site(rng))});
  }
  return w;
}

/// Product of generators computed with NCPoly multiplication.
inline NCPoly word_product(const RawWord& w) {
  NCPoly p(1);
  for (const auto& g : w) p = p * NCPoly::gen(g.kind, g.site);
  return p;
}

inline NCPoly random_ncpoly(std::mt19937_64& rng, unsigned max_len, unsigned sites,
                            unsigned max_terms = 4) {
  std::uniform_int_distribution<int> nterms(1, static_cast<int>(max_terms));
  NCPoly p;
  for (int t = nterms(rng); t > 0; --t) p += word_product(random_word(rng, max_len, sites)) * random_cpoly(rng, 2, 2);
  return p;
}

}  // namespace reflalg::testutil
