#pragma once

// Seeded draws that are reproducible bit-for-bit across standard libraries:
// std::mt19937_64 has a fully specified output sequence, and the conversions
// below avoid the implementation-defined std::*_distribution classes.

#include <cstdint>
#include <random>

#include "qpd/angle.hpp"
#include "qpd/game.hpp"

namespace qpd {

inline constexpr std::uint64_t kDefaultSeed = 20070412;

class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform on [lo, hi].
  double uniform(double lo, double hi) {
    const double x = lo + (hi - lo) * unit();
    return x > hi ? hi : x;
  }
  bool coin() { return (engine_() >> 63) != 0; }

  double entanglement() { return uniform(0.0, kPi / 2); }
  double phase() { return uniform(-kPi, kPi); }
  StrategyParams strategy() { return StrategyParams(uniform(0.0, kPi), phase(), phase()); }
  Profile profile() { return Profile{strategy(), strategy(), strategy()}; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qpd
