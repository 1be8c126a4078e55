#pragma once

// The full verification bundle behind `qpd verify`: every published claim the
// engine can check, grouped into inputs, results, fixture comparisons,
// verdicts and discrepancies.

#include <cstdint>
#include <vector>

#include "qpd/equilibrium.hpp"
#include "qpd/report.hpp"
#include "qpd/verdict.hpp"

namespace qpd {

struct VerifyOptions {
  std::uint64_t seed = 0;
  GridSpec grid;
  PayoffTable payoffs;
  OpponentPhases phases = OpponentPhases::kRestricted;
};

struct VerificationBundle {
  Json document;
  std::vector<Verdict> verdicts;
  bool hard_passed = false;
};

// Independent sub-stream seed: fixed function of the master seed and stream id.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

VerificationBundle run_verification(const VerifyOptions& options);

}  // namespace qpd
