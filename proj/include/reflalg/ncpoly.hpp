#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "reflalg/cpoly.hpp"
#include "reflalg/unipoly.hpp"

namespace reflalg {

/// sl2 generator kinds in PBW order: f < h < e.
enum class Gen : std::uint8_t { f = 0, h = 1, e = 2 };

/// One sl2 generator living on tensor factor `site` (1-based).
struct GenSymbol {
  Gen kind;
  unsigned site;
  friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

/// f^f h^h e^e on one site.
struct SiteMonomial {
  std::uint16_t site = 1;
  std::uint16_t f = 0;
  std::uint16_t h = 0;
  std::uint16_t e = 0;

  unsigned degree() const { return f + h + e; }
  friend auto operator<=>(const SiteMonomial&, const SiteMonomial&) = default;
};

/// A PBW-ordered word: per-site monomials, sites strictly ascending, no
/// empty site monomials. The empty word is the unit.
class PbwWord {
 public:
  PbwWord() = default;
  /// Requires sites strictly ascending and non-empty monomials.
  explicit PbwWord(std::vector<SiteMonomial> parts);

  const std::vector<SiteMonomial>& parts() const { return parts_; }
  bool is_unit() const { return parts_.empty(); }
  unsigned degree() const;
  /// h-weight 2(#e - #f) at the given site.
  int weight_at(unsigned site) const;
  /// Expanded letter sequence.
  std::vector<GenSymbol> letters() const;

  /// Graded order: total degree first, then lexicographic on the parts.
  friend bool operator<(const PbwWord& a, const PbwWord& b);
  friend bool operator==(const PbwWord&, const PbwWord&) = default;

  /// e.g. "f1^2*h1*e2"; "1" for the unit.
  std::string str() const;

 private:
  std::vector<SiteMonomial> parts_;
};

/// Element of U(sl2)^{(x)n} with CPoly coefficients, held in PBW normal form.
/// Two elements are equal iff their term maps coincide.
class NCPoly {
 public:
  using TermMap = std::map<PbwWord, CPoly>;

  NCPoly() = default;
  NCPoly(CPoly scalar);  // NOLINT(google-explicit-constructor)
  NCPoly(Rational scalar) : NCPoly(CPoly(std::move(scalar))) {}  // NOLINT(google-explicit-constructor)
  NCPoly(long scalar) : NCPoly(CPoly(scalar)) {}  // NOLINT(google-explicit-constructor)
  NCPoly(int scalar) : NCPoly(CPoly(scalar)) {}   // NOLINT(google-explicit-constructor)
  NCPoly(PbwWord w, CPoly coeff);

  static NCPoly gen(Gen kind, unsigned site);
  static NCPoly e(unsigned site) { return gen(Gen::e, site); }
  static NCPoly f(unsigned site) { return gen(Gen::f, site); }
  static NCPoly h(unsigned site) { return gen(Gen::h, site); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of the word (zero if absent).
  CPoly coeff(const PbwWord& w) const;
  /// True when every word is the unit word.
  bool is_scalar() const;

  /// Largest word degree; 0 for zero and scalars.
  unsigned word_degree() const;
  /// Largest site index used; 0 if none.
  unsigned max_site() const;
  unsigned degree_in(Var v) const;

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly& operator*=(const CPoly& c);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(NCPoly a, const CPoly& c) { return a *= c; }
  friend NCPoly operator*(const CPoly& c, NCPoly a) { return a *= c; }
  friend NCPoly operator*(NCPoly a, const Rational& r) { return a *= CPoly(r); }
  friend NCPoly operator*(const Rational& r, NCPoly a) { return a *= CPoly(r); }

  NCPoly pow(unsigned e) const;

  /// Applies a substitution to every coefficient.
  NCPoly subst(Var v, const CPoly& value) const;
  /// Divides every coefficient exactly by d (NotDivisible otherwise).
  NCPoly divexact(const CPoly& d) const;

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  /// Deterministic text: words in descending graded order, coefficients in
  /// canonical CPoly form.
  std::string str() const;

 private:
  void add_term(const PbwWord& w, const CPoly& c);
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const NCPoly& p);

NCPoly commutator(const NCPoly& a, const NCPoly& b);
NCPoly anticommutator(const NCPoly& a, const NCPoly& b);

/// 2{e,f} + h^2 at the given site.
NCPoly casimir(unsigned site);

/// Shifts every site index by `shift`; ShiftUnderflow if a site drops below 1.
NCPoly embed(const NCPoly& p, int shift);

/// Linear combination of unordered words, the input of the rewriting system.
using RawWord = std::vector<GenSymbol>;
using RawExpr = std::vector<std::pair<RawWord, CPoly>>;

/// Which disallowed adjacent pair to rewrite first.
enum class RewriteStrategy { leftmost, rightmost, randomized };

/// Reduces raw words to PBW normal form by the rewriting rules
///   e f -> f e + h,  h f -> f h - 2f,  e h -> h e - 2e  (same site),
///   a_i b_j -> b_j a_i                                  (site i > site j).
/// `seed` drives the randomized strategy only.
NCPoly normal_form(const RawExpr& expr, RewriteStrategy strategy = RewriteStrategy::leftmost,
                   std::uint64_t seed = 0);
NCPoly normal_form(const RawWord& word, RewriteStrategy strategy = RewriteStrategy::leftmost,
                   std::uint64_t seed = 0);

/// Splits p by powers of x: result[k] is the x-free coefficient of x^k.
UniPoly<NCPoly> split_x(const NCPoly& p);
NCPoly join_x(const UniPoly<NCPoly>& p);

}  // namespace reflalg
