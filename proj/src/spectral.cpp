#include "reflalg/spectral.hpp"

#include <sstream>

#include "reflalg/errors.hpp"

namespace reflalg {

SpectralMatrix::SpectralMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

SpectralMatrix::SpectralMatrix(std::size_t dim, std::vector<NCPoly> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim * dim) throw DimensionMismatch("SpectralMatrix: wrong entry count");
}

SpectralMatrix SpectralMatrix::identity(std::size_t dim) {
  SpectralMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = NCPoly(1);
  return m;
}

SpectralMatrix SpectralMatrix::diag(const std::vector<NCPoly>& d) {
  SpectralMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

SpectralMatrix SpectralMatrix::of2(NCPoly a11, NCPoly a12, NCPoly a21, NCPoly a22) {
  return SpectralMatrix(2, {std::move(a11), std::move(a12), std::move(a21), std::move(a22)});
}

bool SpectralMatrix::is_zero() const {
  for (const auto& e : data_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

std::size_t SpectralMatrix::term_count() const {
  std::size_t n = 0;
  for (const auto& e : data_) n += e.size();
  return n;
}

SpectralMatrix SpectralMatrix::subst(Var v, const CPoly& value) const {
  SpectralMatrix m(dim_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k].subst(v, value);
  return m;
}

SpectralMatrix SpectralMatrix::scaled(const CPoly& c) const {
  SpectralMatrix m(dim_);
  for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
  return m;
}

SpectralMatrix SpectralMatrix::transposed() const {
  SpectralMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(j, i) = (*this)(i, j);
  }
  return m;
}

namespace {
void require_same(const SpectralMatrix& a, const SpectralMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": " + std::to_string(a.dim()) + " vs " +
                            std::to_string(b.dim()));
  }
}
}  // namespace

SpectralMatrix operator+(const SpectralMatrix& a, const SpectralMatrix& b) {
  require_same(a, b, "mat_add");
  SpectralMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
  return m;
}

SpectralMatrix operator-(const SpectralMatrix& a, const SpectralMatrix& b) {
  require_same(a, b, "mat_sub");
  SpectralMatrix m = a;
  for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
  return m;
}

SpectralMatrix operator*(const SpectralMatrix& a, const SpectralMatrix& b) {
  require_same(a, b, "mat_mul");
  const std::size_t n = a.dim_;
  SpectralMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const NCPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const NCPoly& bkj = b(k, j);
        if (bkj.is_zero()) continue;
        m(i, j) += aik * bkj;
      }
    }
  }
  return m;
}

std::string SpectralMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const auto& e = (*this)(i, j);
      if (!e.is_zero()) os << "(" << i + 1 << "," << j + 1 << "): " << e.str() << "\n";
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const SpectralMatrix& m) { return os << m.str(); }

SpectralMatrix kron(const SpectralMatrix& a, const SpectralMatrix& b) {
  const std::size_t n = a.dim();
  const std::size_t p = b.dim();
  SpectralMatrix m(n * p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < p; ++k) {
        for (std::size_t l = 0; l < p; ++l) {
          if (b(k, l).is_zero()) continue;
          m(i * p + k, j * p + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return m;
}

SpectralMatrix leg_embed(const SpectralMatrix& b, int leg) {
  if (b.dim() != 2) throw DimensionMismatch("leg_embed: expects a 2x2 matrix");
  if (leg == 1) return kron(b, SpectralMatrix::identity(2));
  if (leg == 2) return kron(SpectralMatrix::identity(2), b);
  throw std::invalid_argument("leg_embed: leg must be 1 or 2");
}

SpectralMatrix embed_legs(const SpectralMatrix& op, int first, int second, int num_legs) {
  if (op.dim() != 4) throw DimensionMismatch("embed_legs: expects a 4x4 operator");
  if (first < 1 || second < 1 || first > num_legs || second > num_legs || first == second) {
    throw std::invalid_argument("embed_legs: bad leg indices");
  }
  const std::size_t dim = std::size_t{1} << num_legs;
  auto bit = [num_legs](std::size_t idx, int leg) { return (idx >> (num_legs - leg)) & 1u; };
  SpectralMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      bool spectators_match = true;
      for (int leg = 1; leg <= num_legs; ++leg) {
        if (leg != first && leg != second && bit(r, leg) != bit(c, leg)) spectators_match = false;
      }
      if (!spectators_match) continue;
      std::size_t i = 2 * bit(r, first) + bit(r, second);
      std::size_t j = 2 * bit(c, first) + bit(c, second);
      m(r, c) = op(i, j);
    }
  }
  return m;
}

SpectralMatrix permutation4() {
  SpectralMatrix p(4);
  p(0, 0) = NCPoly(1);
  p(1, 2) = NCPoly(1);
  p(2, 1) = NCPoly(1);
  p(3, 3) = NCPoly(1);
  return p;
}

SpectralMatrix rhat_with(const CPoly& u, const SpectralMatrix& perm) {
  return SpectralMatrix::identity(4).scaled(u) - perm;
}

SpectralMatrix rhat(const CPoly& u) { return rhat_with(u, permutation4()); }

SpectralMatrix l_matrix(unsigned site, Var spectral) {
  const NCPoly s(CPoly::var(spectral));
  const NCPoly h = NCPoly::h(site);
  const Rational half(1, 2);
  const NCPoly diag_part = s - NCPoly(half);
  return SpectralMatrix::of2(diag_part - h * half, -NCPoly::f(site), -NCPoly::e(site),
                             diag_part + h * half);
}

SpectralMatrix check_yang_baxter(const SpectralMatrix& perm) {
  const SpectralMatrix r12 = embed_legs(rhat_with(X() - Y(), perm), 1, 2, 3);
  const SpectralMatrix r13 = embed_legs(rhat_with(X() - Z(), perm), 1, 3, 3);
  const SpectralMatrix r23 = embed_legs(rhat_with(Y() - Z(), perm), 2, 3, 3);
  return r12 * r13 * r23 - r23 * r13 * r12;
}

RllResidual check_rll(const SpectralMatrix& l_of_x) {
  const SpectralMatrix l1 = leg_embed(l_of_x, 1);
  const SpectralMatrix l2 = leg_embed(l_of_x.subst(Var::x, Y()), 2);
  const SpectralMatrix r_minus = rhat(X() - Y());
  const SpectralMatrix r_plus = rhat(X() + Y());
  return {r_minus * l1 * l2 - l2 * l1 * r_minus, l2 * r_plus * l1 - l1 * r_plus * l2};
}

SpectralMatrix check_reflection(const SpectralMatrix& b) {
  const SpectralMatrix b1 = leg_embed(b, 1);
  const SpectralMatrix b2 = leg_embed(b.subst(Var::x, Y()), 2);
  const SpectralMatrix r_minus = rhat(X() - Y());
  const SpectralMatrix r_plus = rhat(X() + Y());
  return r_minus * b1 * r_plus * b2 - b2 * r_plus * b1 * r_minus;
}

}  // namespace reflalg
