#pragma once

#include <stdexcept>
#include <string>

namespace reflalg {

/// Base class for structural failures raised by the algebra layer. A thrown
/// error means an input violated a precondition or a claimed identity
/// (divisibility, vanishing, span membership) did not hold.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact division left a nonzero remainder.
class NotDivisible : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Re-indexing tensor sites produced a site below 1.
class ShiftUnderflow : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class DimensionMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// e(0) or f(0) of a component polynomial is nonzero.
class ZeroValueViolation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// A component does not lie in the span of the requested Euler basis.
class NonzeroRemainder : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// B(x)B(-x) is not a scalar multiple of the identity.
class NotScalar : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// hbar(x) is not monic of the expected degree.
class NotMonic : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace reflalg
