#include "reflalg/cpoly.hpp"

#include <algorithm>
#include <sstream>

#include "reflalg/errors.hpp"

namespace reflalg {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::y: return "y";
    case Var::z: return "z";
    case Var::mu0: return "mu0";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Var v, unsigned e) {
  std::array<unsigned, kNumVars> ex{};
  ex[static_cast<unsigned>(v)] = e;
  return from_exponents(ex);
}

Monomial Monomial::from_exponents(const std::array<unsigned, kNumVars>& e) {
  std::uint64_t key = 0;
  unsigned deg = 0;
  for (Var v : kAllVars) {
    unsigned k = e[static_cast<unsigned>(v)];
    if (k > kMaxExponent) throw std::overflow_error("Monomial: exponent overflow");
    key |= static_cast<std::uint64_t>(k) << shift(v);
    deg += k;
  }
  return Monomial(key | (static_cast<std::uint64_t>(deg) << 48));
}

bool Monomial::divides(const Monomial& other) const {
  for (Var v : kAllVars) {
    if (exponent(v) > other.exponent(v)) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  for (Var v : kAllVars) {
    if (exponent(v) + o.exponent(v) > kMaxExponent) {
      throw std::overflow_error("Monomial: exponent overflow");
    }
  }
  return Monomial(key_ + o.key_);
}

Monomial Monomial::operator/(const Monomial& o) const { return Monomial(key_ - o.key_); }

Monomial Monomial::without(Var v) const {
  std::array<unsigned, kNumVars> e{};
  for (Var w : kAllVars) e[static_cast<unsigned>(w)] = (w == v) ? 0 : exponent(w);
  return from_exponents(e);
}

std::string Monomial::str() const {
  std::string out;
  for (Var v : kAllVars) {
    unsigned e = exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(v);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// CPoly

namespace {

bool term_greater(const CPoly::Term& a, const CPoly::Term& b) { return a.mono > b.mono; }

// Sorts descending and merges equal monomials, dropping zeros.
std::vector<CPoly::Term> canonicalize(std::vector<CPoly::Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<CPoly::Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

}  // namespace

CPoly::CPoly(Rational c) {
  if (!c.is_zero()) terms_.push_back({Monomial{}, std::move(c)});
}

CPoly::CPoly(Monomial m, Rational c) {
  if (!c.is_zero()) terms_.push_back({m, std::move(c)});
}

CPoly CPoly::from_terms(std::vector<Term> terms) {
  CPoly p;
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

Rational CPoly::constant_value() const {
  if (!is_constant()) throw std::logic_error("CPoly::constant_value on non-constant " + str());
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational CPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Rational(0);
}

unsigned CPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(v));
  return d;
}

CPoly CPoly::coeff_of(Var v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono.exponent(v) == k) out.push_back({t.mono.without(v), t.coeff});
  }
  return from_terms(std::move(out));
}

CPoly CPoly::subst(Var v, const CPoly& value) const {
  unsigned top = degree_in(v);
  if (top == 0) return *this;
  std::vector<CPoly> powers{CPoly(1)};
  for (unsigned k = 1; k <= top; ++k) powers.push_back(powers.back() * value);
  CPoly out;
  for (const auto& t : terms_) {
    CPoly rest(t.mono.without(v), t.coeff);
    out += rest * powers[t.mono.exponent(v)];
  }
  return out;
}

CPoly CPoly::operator-() const {
  CPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void CPoly::add_scaled(const CPoly& o, const Rational& scale) {
  if (o.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->mono > b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono > a->mono) {
      out.push_back({b->mono, b->coeff * scale});
      ++b;
    } else {
      Rational c = a->coeff + b->coeff * scale;
      if (!c.is_zero()) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

CPoly& CPoly::operator+=(const CPoly& o) {
  add_scaled(o, Rational(1));
  return *this;
}

CPoly& CPoly::operator-=(const CPoly& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

CPoly& CPoly::operator*=(const Rational& r) {
  if (r.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= r;
  }
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return a * b.constant_value();
  if (a.is_constant()) return b * a.constant_value();
  std::vector<CPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return CPoly::from_terms(std::move(prod));
}

CPoly CPoly::pow(unsigned e) const {
  CPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string CPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = t.coeff.abs();
    if (first) {
      if (t.coeff.sign() < 0) os << '-';
    } else {
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << t.mono.str();
    } else {
      os << mag.str() << '*' << t.mono.str();
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CPoly& p) { return os << p.str(); }

std::pair<CPoly, CPoly> div_rem(const CPoly& p, const CPoly& d) {
  if (d.is_zero()) throw std::domain_error("div_rem: zero divisor");
  const auto& lead = d.leading();
  std::vector<CPoly::Term> quot;
  std::vector<CPoly::Term> rem;
  CPoly work = p;
  while (!work.is_zero()) {
    const auto& lt = work.leading();
    if (lead.mono.divides(lt.mono)) {
      CPoly::Term q{lt.mono / lead.mono, lt.coeff / lead.coeff};
      work -= d * CPoly(q.mono, q.coeff);
      quot.push_back(std::move(q));
    } else {
      rem.push_back(lt);
      work -= CPoly(lt.mono, lt.coeff);
    }
  }
  return {CPoly::from_terms(std::move(quot)), CPoly::from_terms(std::move(rem))};
}

CPoly divexact(const CPoly& p, const CPoly& d) {
  auto [q, r] = div_rem(p, d);
  if (!r.is_zero()) {
    throw NotDivisible("divexact: (" + p.str() + ") / (" + d.str() + ") leaves remainder " + r.str());
  }
  return q;
}

}  // namespace reflalg
