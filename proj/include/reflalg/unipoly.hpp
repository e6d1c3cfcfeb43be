#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "reflalg/rational.hpp"

namespace reflalg {

namespace detail {
inline bool is_zero(const Rational& r) { return r.is_zero(); }
template <class A>
bool is_zero(const A& a) {
  return a.is_zero();
}
}  // namespace detail

/// Polynomial in the spectral variable x with coefficients in an arbitrary
/// associative algebra A over Rational. coeffs[k] multiplies x^k; trailing
/// zero coefficients are trimmed so that degree() is exact.
template <class A>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<A> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<A>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k (zero beyond the degree).
  A operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : A{}; }
  const A& leading() const { return coeffs_.back(); }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    trim();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

  /// Multiplies every coefficient by the scalar polynomial s (x commutes with A).
  UniPoly scaled_by(const UniPoly<Rational>& s) const;
  /// coeff * s(x) for a single algebra element.
  static UniPoly times(const A& coeff, const UniPoly<Rational>& s);

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && detail::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<A> coeffs_;
};

template <class A>
UniPoly<A> UniPoly<A>::times(const A& coeff, const UniPoly<Rational>& s) {
  std::vector<A> out(s.coeffs().size());
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) out[k] = coeff * s.coeffs()[k];
  return UniPoly(std::move(out));
}

template <class A>
UniPoly<A> UniPoly<A>::scaled_by(const UniPoly<Rational>& s) const {
  if (is_zero() || s.is_zero()) return {};
  std::vector<A> out(coeffs_.size() + s.coeffs().size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < s.coeffs().size(); ++j) {
      out[i + j] = out[i + j] + coeffs_[i] * s.coeffs()[j];
    }
  }
  return UniPoly(std::move(out));
}

using ScalarPoly = UniPoly<Rational>;

}  // namespace reflalg
