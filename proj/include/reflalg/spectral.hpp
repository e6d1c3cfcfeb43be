#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "reflalg/ncpoly.hpp"

namespace reflalg {

/// Square matrix over NCPoly. Leg (matrix) indices and algebra tensor sites
/// are independent: legs index rows/columns, sites live inside the entries.
class SpectralMatrix {
 public:
  SpectralMatrix() = default;
  explicit SpectralMatrix(std::size_t dim);
  SpectralMatrix(std::size_t dim, std::vector<NCPoly> row_major);

  static SpectralMatrix identity(std::size_t dim);
  static SpectralMatrix diag(const std::vector<NCPoly>& d);
  /// 2x2 from entries in row-major order.
  static SpectralMatrix of2(NCPoly a11, NCPoly a12, NCPoly a21, NCPoly a22);

  std::size_t dim() const { return dim_; }
  NCPoly& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const NCPoly& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  bool is_zero() const;
  /// Total number of PBW terms over all entries.
  std::size_t term_count() const;

  SpectralMatrix subst(Var v, const CPoly& value) const;
  SpectralMatrix scaled(const CPoly& c) const;
  SpectralMatrix transposed() const;

  friend SpectralMatrix operator+(const SpectralMatrix& a, const SpectralMatrix& b);
  friend SpectralMatrix operator-(const SpectralMatrix& a, const SpectralMatrix& b);
  friend SpectralMatrix operator*(const SpectralMatrix& a, const SpectralMatrix& b);
  friend bool operator==(const SpectralMatrix&, const SpectralMatrix&) = default;

  /// One entry per line: "(i,j): <entry>" for nonzero entries.
  std::string str() const;

 private:
  std::size_t dim_ = 0;
  std::vector<NCPoly> data_;
};

std::ostream& operator<<(std::ostream& os, const SpectralMatrix& m);

inline SpectralMatrix mat_mul(const SpectralMatrix& a, const SpectralMatrix& b) { return a * b; }
inline SpectralMatrix mat_add(const SpectralMatrix& a, const SpectralMatrix& b) { return a + b; }

/// Kronecker product; entry products keep the left factor first.
SpectralMatrix kron(const SpectralMatrix& a, const SpectralMatrix& b);

/// B (x) I2 for leg 1, I2 (x) B for leg 2. Requires a 2x2 input.
SpectralMatrix leg_embed(const SpectralMatrix& b, int leg);

/// Places a 4x4 two-leg operator on legs (first, second) of an n-leg space
/// (legs 1-based, each of dimension 2).
SpectralMatrix embed_legs(const SpectralMatrix& op, int first, int second, int num_legs);

/// The 4x4 permutation matrix P.
SpectralMatrix permutation4();

/// u*I4 - P, i.e. u*R(u) with the rational R-matrix R(u) = I - P/u.
SpectralMatrix rhat(const CPoly& u);
/// u*I4 - perm, for negative controls with a different "permutation".
SpectralMatrix rhat_with(const CPoly& u, const SpectralMatrix& perm);

/// (1/2)[[2s-1-h, -2f], [-2e, 2s-1+h]] with generators at `site`, where s is
/// the spectral variable (x by default).
SpectralMatrix l_matrix(unsigned site, Var spectral = Var::x);

/// R12(x-y) R13(x-z) R23(y-z) - R23(y-z) R13(x-z) R12(x-y) on 8 dims.
SpectralMatrix check_yang_baxter(const SpectralMatrix& perm = permutation4());

struct RllResidual {
  /// R(x-y) L1(x) L2(y) - L2(y) L1(x) R(x-y)
  SpectralMatrix rll;
  /// L2(y) R(x+y) L1(x) - L1(x) R(x+y) L2(y)
  SpectralMatrix crossed;
  bool is_zero() const { return rll.is_zero() && crossed.is_zero(); }
};

/// Both L-matrix relations for a 2x2 L(x) (x-dependent; L(y) is obtained by
/// substitution).
RllResidual check_rll(const SpectralMatrix& l_of_x);
inline RllResidual check_rll(unsigned site) { return check_rll(l_matrix(site)); }

/// R(x-y) B1(x) R(x+y) B2(y) - B2(y) R(x+y) B1(x) R(x-y) for a 2x2 B(x).
SpectralMatrix check_reflection(const SpectralMatrix& b);

}  // namespace reflalg
