#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qpd/game.hpp"
#include "qpd/linalg.hpp"
#include "qpd/sampling.hpp"

using namespace qpd;

namespace {

const Complex kI(0, 1);

SquareOperator pauli_x() { return SquareOperator(2, {0, 1, 1, 0}); }

StateVector random_state(SeededSampler& rng, std::size_t dim) {
  std::vector<Complex> amps(dim);
  double norm = 0;
  for (auto& a : amps) {
    a = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    norm += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm);
  return StateVector(amps);
}

SquareOperator random_operator(SeededSampler& rng, std::size_t dim) {
  std::vector<Complex> e(dim * dim);
  for (auto& x : e) x = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return SquareOperator(dim, e);
}

}  // namespace

TEST_CASE("construction checks") {
  CHECK_THROWS_AS(StateVector({1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector({}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector({Complex(NAN, 0), 0}), std::domain_error);
  CHECK_THROWS_AS(SquareOperator(2, {1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(StateVector::basis(8, 8), std::out_of_range);
  CHECK(StateVector::basis(8, 3)[3] == Complex(1));
}

TEST_CASE("tensor3 examples") {
  const auto I = SquareOperator::identity(2);
  CHECK(max_abs_diff(tensor3(I, I, I), SquareOperator::identity(8)) == 0.0);

  const auto flipped = apply(tensor3(pauli_x(), I, I), StateVector::basis(8, 0));
  CHECK(max_abs_diff(flipped, StateVector::basis(8, 4)) == 0.0);

  const auto u = strategy_unitary(StrategyParams(kPi, kPi, kPi));
  const auto out = apply(tensor3(u, I, I), StateVector::basis(8, 0));
  std::vector<Complex> expected(8, 0);
  expected[4] = -kI;
  CHECK(max_abs_diff(out, StateVector(expected)) < kAlgebraTol);
}

TEST_CASE("dimension mismatches") {
  const auto I2 = SquareOperator::identity(2);
  const auto I8 = SquareOperator::identity(8);
  CHECK_THROWS_AS(apply(I8, StateVector::basis(2, 0)), std::invalid_argument);
  CHECK_THROWS_AS(multiply(I2, I8), std::invalid_argument);
  CHECK_THROWS_AS(add(I2, I8), std::invalid_argument);
  CHECK_THROWS_AS(tensor3(I8, I2, I2), std::invalid_argument);
  CHECK_THROWS_AS(inner(StateVector::basis(2, 0), StateVector::basis(8, 0)), std::invalid_argument);
  CHECK_THROWS_AS(expectation(I2, StateVector::basis(8, 0)), std::invalid_argument);
}

TEST_CASE("adjoint examples") {
  const auto I8 = SquareOperator::identity(8);
  CHECK(max_abs_diff(adjoint(I8), I8) == 0.0);
  const std::vector<Complex> d{kI, -kI};
  const std::vector<Complex> dc{-kI, kI};
  CHECK(max_abs_diff(adjoint(SquareOperator::diagonal(d)), SquareOperator::diagonal(dc)) == 0.0);

  SeededSampler rng(11);
  for (int i = 0; i < 20; ++i) {
    const auto m = random_operator(rng, 8);
    CHECK(max_abs_diff(adjoint(adjoint(m)), m) == 0.0);
  }
}

TEST_CASE("strategy unitaries are unitary over 1000 draws") {
  SeededSampler rng(1);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto u = strategy_unitary(rng.strategy());
    worst = std::max(worst, max_abs_diff(multiply(adjoint(u), u), SquareOperator::identity(2)));
  }
  CHECK(worst < kAlgebraTol);
}

TEST_CASE("outer examples") {
  const auto o = outer(StateVector::basis(8, 0));
  CHECK(o(0, 0) == Complex(1));
  CHECK(trace(o) == Complex(1));

  std::vector<Complex> amps(8, 0);
  amps[0] = 1 / std::sqrt(2.0);
  amps[7] = kI / std::sqrt(2.0);
  const auto ghz = outer(StateVector(amps));
  CHECK(std::abs(ghz(0, 0) - 0.5) < kAlgebraTol);
  CHECK(std::abs(ghz(7, 7) - 0.5) < kAlgebraTol);
  CHECK(std::abs(ghz(0, 7) - (-kI / 2.0)) < kAlgebraTol);
  CHECK(std::abs(ghz(7, 0) - (kI / 2.0)) < kAlgebraTol);
  CHECK(ghz.is_projector());

  CHECK_THROWS_AS(outer(StateVector({1, 1})), std::invalid_argument);
}

TEST_CASE("outer and trace properties") {
  SeededSampler rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto v = random_state(rng, 8);
    const auto p = outer(v);
    CHECK(std::abs(trace(p) - 1.0) < kAlgebraTol);
    CHECK(max_abs_diff(apply(p, v), v) < kAlgebraTol);
    CHECK(p.is_hermitian());
    CHECK(p.is_projector());
  }
}

TEST_CASE("trace basics and cyclicity") {
  CHECK(trace(SquareOperator::identity(8)) == Complex(8));
  const auto v = StateVector::basis(8, 5);
  CHECK(max_abs_diff(apply(SquareOperator::identity(8), v), v) == 0.0);

  SeededSampler rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_operator(rng, 8);
    const auto b = random_operator(rng, 8);
    CHECK(std::abs(trace(multiply(a, b)) - trace(multiply(b, a))) < 1e-11);
  }
}

TEST_CASE("tensor3 agrees with nested kron both ways") {
  SeededSampler rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_operator(rng, 2);
    const auto b = random_operator(rng, 2);
    const auto c = random_operator(rng, 2);
    const auto t = tensor3(a, b, c);
    CHECK(max_abs_diff(t, kron(kron(a, b), c)) < kAlgebraTol);
    CHECK(max_abs_diff(t, kron(a, kron(b, c))) < kAlgebraTol);
  }
}

TEST_CASE("final density has unit trace and is a pure state") {
  SeededSampler rng(5);
  for (int i = 0; i < 200; ++i) {
    const double gamma = rng.entanglement();
    const auto rho = final_density(gamma, rng.profile());
    CHECK(std::abs(trace(rho) - 1.0) < kAlgebraTol);
    CHECK(rho.is_hermitian());
    CHECK(rho.is_projector(1e-11));
  }
}

TEST_CASE("inner and expectation") {
  const auto a = StateVector({1, kI});
  const auto b = StateVector({kI, 1});
  // <a|b> = 1*i + (-i)*1 = 0
  CHECK(std::abs(inner(a, b)) < kAlgebraTol);
  CHECK(std::abs(inner(a, a) - 2.0) < kAlgebraTol);
  const std::vector<Complex> d{1, 3};
  CHECK(std::abs(expectation(SquareOperator::diagonal(d), a) - 4.0) < kAlgebraTol);
}
