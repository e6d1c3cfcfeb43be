#include "reflalg/ncpoly.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "reflalg/errors.hpp"

namespace reflalg {

// ---------------------------------------------------------------------------
// PbwWord

PbwWord::PbwWord(std::vector<SiteMonomial> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i].site < 1 || parts_[i].degree() == 0 ||
        (i > 0 && parts_[i].site <= parts_[i - 1].site)) {
      throw std::invalid_argument("PbwWord: parts must be non-empty with ascending sites");
    }
  }
}

unsigned PbwWord::degree() const {
  unsigned d = 0;
  for (const auto& p : parts_) d += p.degree();
  return d;
}

int PbwWord::weight_at(unsigned site) const {
  for (const auto& p : parts_) {
    if (p.site == site) return 2 * (static_cast<int>(p.e) - static_cast<int>(p.f));
  }
  return 0;
}

std::vector<GenSymbol> PbwWord::letters() const {
  std::vector<GenSymbol> out;
  for (const auto& p : parts_) {
    out.insert(out.end(), p.f, GenSymbol{Gen::f, p.site});
    out.insert(out.end(), p.h, GenSymbol{Gen::h, p.site});
    out.insert(out.end(), p.e, GenSymbol{Gen::e, p.site});
  }
  return out;
}

bool operator<(const PbwWord& a, const PbwWord& b) {
  unsigned da = a.degree();
  unsigned db = b.degree();
  if (da != db) return da < db;
  return a.parts_ < b.parts_;
}

std::string PbwWord::str() const {
  if (parts_.empty()) return "1";
  std::string out;
  auto emit = [&](char g, unsigned site, unsigned k) {
    if (k == 0) return;
    if (!out.empty()) out += '*';
    out += g;
    out += std::to_string(site);
    if (k > 1) out += "^" + std::to_string(k);
  };
  for (const auto& p : parts_) {
    emit('f', p.site, p.f);
    emit('h', p.site, p.h);
    emit('e', p.site, p.e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Single-site straightening in U(sl2).

namespace {

using Exps = std::array<std::uint16_t, 3>;  // (f, h, e)
using SiteElem = std::map<Exps, Rational>;
using SiteTerms = std::vector<std::pair<Exps, Rational>>;

void accumulate(SiteElem& out, const Exps& k, const Rational& r) {
  if (r.is_zero()) return;
  auto [it, inserted] = out.try_emplace(k, r);
  if (!inserted) {
    it->second += r;
    if (it->second.is_zero()) out.erase(it);
  }
}

// Right multiplication by one generator, using
//   e^c h = (h - 2c) e^c,   h^b f = f (h - 2)^b,
//   e^c f = f e^c + c (h - c + 1) e^{c-1}.
SiteElem times_letter(const SiteElem& in, Gen g) {
  SiteElem out;
  for (const auto& [k, r] : in) {
    const auto [a, b, c] = k;
    switch (g) {
      case Gen::e:
        accumulate(out, {a, b, static_cast<std::uint16_t>(c + 1)}, r);
        break;
      case Gen::h:
        accumulate(out, {a, static_cast<std::uint16_t>(b + 1), c}, r);
        accumulate(out, k, r * Rational(-2L * c));
        break;
      case Gen::f: {
        for (unsigned j = 0; j <= b; ++j) {
          Rational coef = Rational(binomial(b, j)) * Rational(-2).pow(b - j);
          accumulate(out, {static_cast<std::uint16_t>(a + 1), static_cast<std::uint16_t>(j), c}, r * coef);
        }
        if (c > 0) {
          const auto cm = static_cast<std::uint16_t>(c - 1);
          accumulate(out, {a, static_cast<std::uint16_t>(b + 1), cm}, r * Rational(static_cast<long>(c)));
          accumulate(out, {a, b, cm}, r * Rational(static_cast<long>(c) * (1L - static_cast<long>(c))));
        }
        break;
      }
    }
  }
  return out;
}

SiteTerms site_product(const SiteMonomial& u, const SiteMonomial& v) {
  SiteElem cur{{Exps{u.f, u.h, u.e}, Rational(1)}};
  for (unsigned i = 0; i < v.f; ++i) cur = times_letter(cur, Gen::f);
  for (unsigned i = 0; i < v.h; ++i) cur = times_letter(cur, Gen::h);
  for (unsigned i = 0; i < v.e; ++i) cur = times_letter(cur, Gen::e);
  return {cur.begin(), cur.end()};
}

// Memo for one multiplication call; products recur heavily across word pairs.
class SiteProductCache {
 public:
  const SiteTerms& get(const SiteMonomial& u, const SiteMonomial& v) {
    std::uint64_t key = 0;
    for (std::uint16_t k : {u.f, u.h, u.e, v.f, v.h, v.e}) {
      if (k >= 1024) throw std::overflow_error("site_product: exponent too large");
      key = (key << 10) | k;
    }
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, site_product(u, v)).first;
    return it->second;
  }

 private:
  std::unordered_map<std::uint64_t, SiteTerms> cache_;
};

struct Factor {
  std::uint16_t site;
  const SiteTerms* terms = nullptr;  // null: single monomial `only`
  SiteMonomial only;
};

void add_scaled(NCPoly::TermMap& acc, const PbwWord& w, const CPoly& c, const Rational& r) {
  CPoly term = c * r;
  auto [it, inserted] = acc.try_emplace(w, term);
  if (!inserted) it->second += term;
}

}  // namespace

// ---------------------------------------------------------------------------
// NCPoly

NCPoly::NCPoly(CPoly scalar) {
  if (!scalar.is_zero()) terms_.emplace(PbwWord{}, std::move(scalar));
}

NCPoly::NCPoly(PbwWord w, CPoly coeff) {
  if (!coeff.is_zero()) terms_.emplace(std::move(w), std::move(coeff));
}

NCPoly NCPoly::gen(Gen kind, unsigned site) {
  if (site < 1) throw std::invalid_argument("NCPoly::gen: site must be >= 1");
  SiteMonomial m{static_cast<std::uint16_t>(site), 0, 0, 0};
  switch (kind) {
    case Gen::f: m.f = 1; break;
    case Gen::h: m.h = 1; break;
    case Gen::e: m.e = 1; break;
  }
  return NCPoly(PbwWord({m}), CPoly(1));
}

CPoly NCPoly::coeff(const PbwWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? CPoly{} : it->second;
}

bool NCPoly::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

unsigned NCPoly::word_degree() const {
  unsigned d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

unsigned NCPoly::max_site() const {
  unsigned s = 0;
  for (const auto& [w, c] : terms_) {
    if (!w.parts().empty()) s = std::max<unsigned>(s, w.parts().back().site);
  }
  return s;
}

unsigned NCPoly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, c.degree_in(v));
  return d;
}

void NCPoly::add_term(const PbwWord& w, const CPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPoly& NCPoly::operator*=(const CPoly& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second = it->second * s;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  SiteProductCache cache;
  NCPoly::TermMap acc;
  std::vector<Factor> factors;
  std::vector<SiteMonomial> parts;

  for (const auto& [u, cu] : a.terms_) {
    for (const auto& [v, cv] : b.terms_) {
      CPoly c = cu * cv;
      if (c.is_zero()) continue;

      // Merge the two site sequences; shared sites need straightening.
      factors.clear();
      const auto& up = u.parts();
      const auto& vp = v.parts();
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < up.size() || j < vp.size()) {
        if (j == vp.size() || (i < up.size() && up[i].site < vp[j].site)) {
          factors.push_back({up[i].site, nullptr, up[i]});
          ++i;
        } else if (i == up.size() || vp[j].site < up[i].site) {
          factors.push_back({vp[j].site, nullptr, vp[j]});
          ++j;
        } else {
          factors.push_back({up[i].site, &cache.get(up[i], vp[j]), {}});
          ++i;
          ++j;
        }
      }

      // Expand the Cartesian product over the straightened factors.
      parts.assign(factors.size(), SiteMonomial{});
      auto expand = [&](auto&& self, std::size_t k, const Rational& r) -> void {
        if (k == factors.size()) {
          std::vector<SiteMonomial> clean;
          clean.reserve(parts.size());
          for (const auto& p : parts) {
            if (p.degree() > 0) clean.push_back(p);
          }
          add_scaled(acc, PbwWord(std::move(clean)), c, r);
          return;
        }
        const Factor& fac = factors[k];
        if (fac.terms == nullptr) {
          parts[k] = fac.only;
          self(self, k + 1, r);
          return;
        }
        for (const auto& [ex, coef] : *fac.terms) {
          parts[k] = SiteMonomial{fac.site, ex[0], ex[1], ex[2]};
          self(self, k + 1, r * coef);
        }
      };
      expand(expand, 0, Rational(1));
    }
  }

  NCPoly out;
  for (auto& [w, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace_hint(out.terms_.end(), w, std::move(c));
  }
  return out;
}

NCPoly NCPoly::pow(unsigned e) const {
  NCPoly r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

NCPoly NCPoly::subst(Var v, const CPoly& value) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.add_term(w, c.subst(v, value));
  return out;
}

NCPoly NCPoly::divexact(const CPoly& d) const {
  NCPoly out;
  for (const auto& [w, c] : terms_) out.terms_.emplace(w, reflalg::divexact(c, d));
  return out;
}

std::string NCPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [w, c] = *it;
    bool single = c.size() == 1;
    bool negative = single && c.leading().coeff.sign() < 0;
    std::string body;
    if (single) {
      const auto& t = c.leading();
      CPoly mag(t.mono, t.coeff.abs());
      if (w.is_unit()) {
        body = mag.str();
      } else if (mag == CPoly(1)) {
        body = w.str();
      } else {
        body = mag.str() + "*" + w.str();
      }
    } else {
      body = "(" + c.str() + ")";
      if (!w.is_unit()) body += "*" + w.str();
    }
    if (first) {
      os << (negative ? "-" : "") << body;
    } else {
      os << (negative ? " - " : " + ") << body;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NCPoly& p) { return os << p.str(); }

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }
NCPoly anticommutator(const NCPoly& a, const NCPoly& b) { return a * b + b * a; }

NCPoly casimir(unsigned site) {
  NCPoly e = NCPoly::e(site);
  NCPoly f = NCPoly::f(site);
  NCPoly h = NCPoly::h(site);
  return anticommutator(e, f) * Rational(2) + h * h;
}

NCPoly embed(const NCPoly& p, int shift) {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    std::vector<SiteMonomial> parts = w.parts();
    for (auto& s : parts) {
      int site = static_cast<int>(s.site) + shift;
      if (site < 1) {
        throw ShiftUnderflow("embed: site " + std::to_string(s.site) + " shifted by " +
                             std::to_string(shift) + " drops below 1");
      }
      s.site = static_cast<std::uint16_t>(site);
    }
    out += NCPoly(PbwWord(std::move(parts)), c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rewriting system on raw words.

namespace {

// True when the adjacent pair (a, b) is not allowed in a PBW word.
bool disallowed(const GenSymbol& a, const GenSymbol& b) {
  if (a.site != b.site) return a.site > b.site;
  return a.kind > b.kind;
}

PbwWord to_pbw(const RawWord& w) {
  std::vector<SiteMonomial> parts;
  for (const auto& g : w) {
    if (parts.empty() || parts.back().site != g.site) {
      parts.push_back(SiteMonomial{static_cast<std::uint16_t>(g.site), 0, 0, 0});
    }
    auto& p = parts.back();
    switch (g.kind) {
      case Gen::f: ++p.f; break;
      case Gen::h: ++p.h; break;
      case Gen::e: ++p.e; break;
    }
  }
  return PbwWord(std::move(parts));
}

void add_raw(std::map<RawWord, CPoly>& expr, RawWord w, const CPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = expr.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) expr.erase(it);
  }
}

}  // namespace

NCPoly normal_form(const RawExpr& input, RewriteStrategy strategy, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<RawWord, CPoly> pending;
  for (const auto& [w, c] : input) {
    for (const auto& g : w) {
      if (g.site < 1) throw std::invalid_argument("normal_form: site must be >= 1");
    }
    add_raw(pending, w, c);
  }

  NCPoly out;
  std::vector<std::size_t> spots;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    RawWord word = std::move(node.key());
    CPoly coeff = std::move(node.mapped());

    spots.clear();
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (disallowed(word[i], word[i + 1])) spots.push_back(i);
    }
    if (spots.empty()) {
      out += NCPoly(to_pbw(word), coeff);
      continue;
    }
    std::size_t i = spots.front();
    if (strategy == RewriteStrategy::rightmost) {
      i = spots.back();
    } else if (strategy == RewriteStrategy::randomized) {
      i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
    }

    const GenSymbol a = word[i];
    const GenSymbol b = word[i + 1];
    RawWord swapped = word;
    std::swap(swapped[i], swapped[i + 1]);
    add_raw(pending, std::move(swapped), coeff);
    if (a.site != b.site) continue;

    // Lower-order correction from the sl2 bracket, replacing the pair.
    RawWord shorter(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i));
    if (a.kind == Gen::e && b.kind == Gen::f) {
      shorter.push_back({Gen::h, a.site});  // ef = fe + h
      shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(i + 2), word.end());
      add_raw(pending, std::move(shorter), coeff);
    } else {
      // hf = fh - 2f ; eh = he - 2e
      shorter.push_back(b.kind == Gen::f ? GenSymbol{Gen::f, a.site} : GenSymbol{Gen::e, a.site});
      shorter.insert(shorter.end(), word.begin() + static_cast<std::ptrdiff_t>(i + 2), word.end());
      add_raw(pending, std::move(shorter), coeff * Rational(-2));
    }
  }
  return out;
}

NCPoly normal_form(const RawWord& word, RewriteStrategy strategy, std::uint64_t seed) {
  return normal_form(RawExpr{{word, CPoly(1)}}, strategy, seed);
}

UniPoly<NCPoly> split_x(const NCPoly& p) {
  std::vector<NCPoly> out(p.degree_in(Var::x) + 1);
  for (const auto& [w, c] : p.terms()) {
    for (unsigned k = 0; k < out.size(); ++k) {
      CPoly ck = c.coeff_of(Var::x, k);
      if (!ck.is_zero()) out[k] += NCPoly(w, std::move(ck));
    }
  }
  return UniPoly<NCPoly>(std::move(out));
}

NCPoly join_x(const UniPoly<NCPoly>& p) {
  NCPoly out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    out += p.coeffs()[k] * CPoly(Monomial::of(Var::x, static_cast<unsigned>(k)), Rational(1));
  }
  return out;
}

}  // namespace reflalg
