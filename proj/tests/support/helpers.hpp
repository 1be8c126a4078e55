#pragma once

#include <cmath>
#include <complex>

#include "doctest.h"
#include "qpd/game.hpp"
#include "reference_oracle.hpp"

namespace qpd::testing {

inline void check_triple(const PayoffTriple& got, double a, double b, double c, double tol) {
  CHECK(std::abs(got.alice - a) <= tol);
  CHECK(std::abs(got.bob - b) <= tol);
  CHECK(std::abs(got.charlie - c) <= tol);
}

inline std::array<reference::Strategy, 3> to_reference(const Profile& p) {
  return {{{p.alice.theta(), p.alice.alpha(), p.alice.beta()},
           {p.bob.theta(), p.bob.alpha(), p.bob.beta()},
           {p.charlie.theta(), p.charlie.alpha(), p.charlie.beta()}}};
}

}  // namespace qpd::testing
