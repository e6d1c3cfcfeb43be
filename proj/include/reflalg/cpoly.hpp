#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reflalg/rational.hpp"

namespace reflalg {

/// The closed set of commuting indeterminates: spectral parameters x, y, z
/// and the level-0 scalar mu0.
enum class Var : std::uint8_t { x = 0, y = 1, z = 2, mu0 = 3 };

inline constexpr std::size_t kNumVars = 4;
inline constexpr std::array<Var, kNumVars> kAllVars = {Var::x, Var::y, Var::z, Var::mu0};

std::string_view var_name(Var v);

/// Exponent vector over {x, y, z, mu0}, packed so that integer comparison of
/// the key is graded lexicographic order (total degree, then x, y, z, mu0).
class Monomial {
 public:
  static constexpr unsigned kBits = 12;
  static constexpr unsigned kMaxExponent = (1u << kBits) - 1;

  constexpr Monomial() = default;
  static Monomial of(Var v, unsigned e = 1);
  static Monomial from_exponents(const std::array<unsigned, kNumVars>& e);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((key_ >> shift(v)) & kMaxExponent);
  }
  unsigned degree() const { return static_cast<unsigned>(key_ >> 48); }
  bool is_one() const { return key_ == 0; }
  std::uint64_t key() const { return key_; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;
  /// Requires divides(other).
  Monomial operator/(const Monomial& o) const;
  Monomial without(Var v) const;

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string str() const;

 private:
  static constexpr unsigned shift(Var v) { return 36 - 12 * static_cast<unsigned>(v); }
  explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

/// Sparse commutative polynomial over Rational. Terms are kept in strictly
/// descending graded-lex order with no zero coefficients, so structural
/// equality is polynomial equality.
class CPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  CPoly() = default;
  CPoly(Rational c);  // NOLINT(google-explicit-constructor)
  CPoly(long c) : CPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  CPoly(int c) : CPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
  CPoly(Monomial m, Rational c);

  static CPoly var(Var v) { return CPoly(Monomial::of(v), Rational(1)); }
  /// Builds from arbitrary (unsorted, possibly repeated) terms.
  static CPoly from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Requires is_constant().
  Rational constant_value() const;
  Rational constant_term() const;

  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
  unsigned degree_in(Var v) const;

  /// Coefficient of v^k, as a polynomial free of v.
  CPoly coeff_of(Var v, unsigned k) const;
  /// p(v -> value).
  CPoly subst(Var v, const CPoly& value) const;

  CPoly operator-() const;
  CPoly& operator+=(const CPoly& o);
  CPoly& operator-=(const CPoly& o);
  CPoly& operator*=(const CPoly& o) { return *this = *this * o; }
  CPoly& operator*=(const Rational& r);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a -= b; }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(CPoly a, const Rational& r) { return a *= r; }
  friend CPoly operator*(const Rational& r, CPoly a) { return a *= r; }

  CPoly pow(unsigned e) const;

  friend bool operator==(const CPoly&, const CPoly&) = default;

  /// Canonical text, e.g. "x^2*mu0 - 1/2*x + 3"; "0" for zero.
  std::string str() const;

 private:
  void add_scaled(const CPoly& o, const Rational& scale);
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const CPoly& p);

/// Multivariate long division by a single divisor under graded-lex order.
/// Returns (quotient, remainder) with p = q*d + r.
std::pair<CPoly, CPoly> div_rem(const CPoly& p, const CPoly& d);

/// q with q*d == p. Throws NotDivisible when the remainder is nonzero.
CPoly divexact(const CPoly& p, const CPoly& d);

/// Convenience handles for the indeterminates.
inline const CPoly& X() { static const CPoly v = CPoly::var(Var::x); return v; }
inline const CPoly& Y() { static const CPoly v = CPoly::var(Var::y); return v; }
inline const CPoly& Z() { static const CPoly v = CPoly::var(Var::z); return v; }
inline const CPoly& Mu0() { static const CPoly v = CPoly::var(Var::mu0); return v; }

}  // namespace reflalg
