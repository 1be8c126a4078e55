#pragma once

// Dense complex linear algebra for the 1-, 2- and 3-qubit spaces used by the
// game: state vectors of dimension 2 or 8 and square operators over them.
// Values are immutable once built; every free function is pure.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qpd {

using Complex = std::complex<double>;

// Tolerance for algebraic identities (unitarity, idempotence, traces).
inline constexpr double kAlgebraTol = 1e-12;
// Tolerance for end-to-end payoff comparisons.
inline constexpr double kPayoffTol = 1e-9;

/// Amplitude vector over a computational basis. For dimension 8 the index b
/// encodes |lmn> with l (Alice) as the most significant bit and n (Charlie) as
/// the least significant bit.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes);

  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  std::span<const Complex> amplitudes() const { return amps_; }

  double norm_squared() const;
  bool is_normalized(double tol = kAlgebraTol) const;

 private:
  std::vector<Complex> amps_;
};

/// Row-major square matrix. Row/column order follows the StateVector basis.
class SquareOperator {
 public:
  SquareOperator(std::size_t dim, std::vector<Complex> entries);

  static SquareOperator identity(std::size_t dim);
  static SquareOperator zero(std::size_t dim);
  static SquareOperator diagonal(std::span<const Complex> diag);

  std::size_t dim() const { return dim_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }

  bool is_hermitian(double tol = kAlgebraTol) const;
  bool is_unitary(double tol = kAlgebraTol) const;
  bool is_projector(double tol = kAlgebraTol) const;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

// Kronecker product a (x) b; the left factor owns the more significant bits.
SquareOperator kron(const SquareOperator& a, const SquareOperator& b);

// a (x) b (x) c for three single-qubit operators.
SquareOperator tensor3(const SquareOperator& a, const SquareOperator& b,
                       const SquareOperator& c);

SquareOperator adjoint(const SquareOperator& m);

// |v><v|. Throws std::invalid_argument unless v is normalized.
SquareOperator outer(const StateVector& v);

StateVector apply(const SquareOperator& m, const StateVector& v);
SquareOperator multiply(const SquareOperator& a, const SquareOperator& b);
SquareOperator add(const SquareOperator& a, const SquareOperator& b);
SquareOperator scale(Complex factor, const SquareOperator& m);
Complex trace(const SquareOperator& m);

// <u|v>, conjugate-linear in u.
Complex inner(const StateVector& u, const StateVector& v);
// <v|m|v>
Complex expectation(const SquareOperator& m, const StateVector& v);

double max_abs_diff(const SquareOperator& a, const SquareOperator& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

}  // namespace qpd
