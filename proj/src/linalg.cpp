#include "qpd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qpd {
namespace {

bool supported_dim(std::size_t dim) { return dim == 2 || dim == 4 || dim == 8; }

void require_finite(std::span<const Complex> values, const char* what) {
  for (const auto& z : values) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::domain_error(std::string(what) + ": non-finite component");
    }
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                std::to_string(a) + " vs " + std::to_string(b) +
                                ")");
  }
}

}  // namespace

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amps_(std::move(amplitudes)) {
  if (!supported_dim(amps_.size())) {
    throw std::invalid_argument("StateVector: unsupported dimension " +
                                std::to_string(amps_.size()));
  }
  require_finite(amps_, "StateVector");
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::out_of_range("StateVector::basis: index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

double StateVector::norm_squared() const {
  double n = 0.0;
  for (const auto& a : amps_) n += std::norm(a);
  return n;
}

bool StateVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

SquareOperator::SquareOperator(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (!supported_dim(dim_)) {
    throw std::invalid_argument("SquareOperator: unsupported dimension " +
                                std::to_string(dim_));
  }
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("SquareOperator: expected " +
                                std::to_string(dim_ * dim_) + " entries, got " +
                                std::to_string(entries_.size()));
  }
  require_finite(entries_, "SquareOperator");
}

SquareOperator SquareOperator::identity(std::size_t dim) {
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = 1.0;
  return SquareOperator(dim, std::move(e));
}

SquareOperator SquareOperator::zero(std::size_t dim) {
  return SquareOperator(dim, std::vector<Complex>(dim * dim));
}

SquareOperator SquareOperator::diagonal(std::span<const Complex> diag) {
  const std::size_t dim = diag.size();
  std::vector<Complex> e(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) e[i * dim + i] = diag[i];
  return SquareOperator(dim, std::move(e));
}

bool SquareOperator::is_hermitian(double tol) const {
  return max_abs_diff(*this, adjoint(*this)) <= tol;
}

bool SquareOperator::is_unitary(double tol) const {
  return max_abs_diff(multiply(*this, adjoint(*this)), identity(dim_)) <= tol;
}

bool SquareOperator::is_projector(double tol) const {
  return is_hermitian(tol) && max_abs_diff(multiply(*this, *this), *this) <= tol;
}

SquareOperator kron(const SquareOperator& a, const SquareOperator& b) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  const std::size_t d = da * db;
  if (!supported_dim(d)) {
    throw std::invalid_argument("kron: result dimension " + std::to_string(d) +
                                " unsupported");
  }
  std::vector<Complex> e(d * d);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ja = 0; ja < da; ++ja)
      for (std::size_t ib = 0; ib < db; ++ib)
        for (std::size_t jb = 0; jb < db; ++jb)
          e[(ia * db + ib) * d + (ja * db + jb)] = a(ia, ja) * b(ib, jb);
  return SquareOperator(d, std::move(e));
}

SquareOperator tensor3(const SquareOperator& a, const SquareOperator& b,
                       const SquareOperator& c) {
  if (a.dim() != 2 || b.dim() != 2 || c.dim() != 2) {
    throw std::invalid_argument("tensor3: every factor must be 2-dimensional");
  }
  std::vector<Complex> e(64);
  for (std::size_t row = 0; row < 8; ++row) {
    const std::size_t l = row >> 2, m = (row >> 1) & 1, n = row & 1;
    for (std::size_t col = 0; col < 8; ++col) {
      const std::size_t lp = col >> 2, mp = (col >> 1) & 1, np = col & 1;
      e[row * 8 + col] = a(l, lp) * b(m, mp) * c(n, np);
    }
  }
  return SquareOperator(8, std::move(e));
}

SquareOperator adjoint(const SquareOperator& m) {
  const std::size_t d = m.dim();
  std::vector<Complex> e(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) e[c * d + r] = std::conj(m(r, c));
  return SquareOperator(d, std::move(e));
}

SquareOperator outer(const StateVector& v) {
  if (!v.is_normalized()) {
    throw std::invalid_argument("outer: vector is not normalized (norm^2 = " +
                                std::to_string(v.norm_squared()) + ")");
  }
  const std::size_t d = v.dim();
  std::vector<Complex> e(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) e[r * d + c] = v[r] * std::conj(v[c]);
  return SquareOperator(d, std::move(e));
}

StateVector apply(const SquareOperator& m, const StateVector& v) {
  require_same_dim(m.dim(), v.dim(), "apply");
  const std::size_t d = m.dim();
  std::vector<Complex> out(d);
  for (std::size_t r = 0; r < d; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < d; ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return StateVector(std::move(out));
}

SquareOperator multiply(const SquareOperator& a, const SquareOperator& b) {
  require_same_dim(a.dim(), b.dim(), "multiply");
  const std::size_t d = a.dim();
  std::vector<Complex> e(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t k = 0; k < d; ++k) {
      const Complex ark = a(r, k);
      for (std::size_t c = 0; c < d; ++c) e[r * d + c] += ark * b(k, c);
    }
  return SquareOperator(d, std::move(e));
}

SquareOperator add(const SquareOperator& a, const SquareOperator& b) {
  require_same_dim(a.dim(), b.dim(), "add");
  std::vector<Complex> e(a.entries().begin(), a.entries().end());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return SquareOperator(a.dim(), std::move(e));
}

SquareOperator scale(Complex factor, const SquareOperator& m) {
  std::vector<Complex> e(m.entries().begin(), m.entries().end());
  for (auto& z : e) z *= factor;
  return SquareOperator(m.dim(), std::move(e));
}

Complex trace(const SquareOperator& m) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

Complex inner(const StateVector& u, const StateVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

Complex expectation(const SquareOperator& m, const StateVector& v) {
  return inner(v, apply(m, v));
}

double max_abs_diff(const SquareOperator& a, const SquareOperator& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace qpd
