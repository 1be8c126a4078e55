#pragma once

// Published analytic payoff expressions, evaluated term by term exactly as
// printed (including the repeated sin(theta_B) factor in the sin(delta) block),
// and a seeded sampler that measures how far they sit from the trace-rule
// payoffs.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qpd/game.hpp"

namespace qpd {

struct ClosedFormTerms {
  double eta1 = 0.0;
  double eta2 = 0.0;
  double xi = 0.0;
  std::array<double, 3> c{};  // cos^2(theta_k / 2)
  std::array<double, 3> s{};  // sin^2(theta_k / 2)
};

ClosedFormTerms closed_form_terms(double gamma, double delta, const Profile& profile);

// General-(gamma, delta) analytic expression.
PayoffTriple closed_form_payoffs(const GameConfig& config, const Profile& profile);

// Maximal-entanglement expression (gamma = delta = pi/2, xi = 1/2). Throws
// std::invalid_argument for any other configuration.
PayoffTriple maximal_entanglement_payoffs(const GameConfig& config, const Profile& profile);

enum class SampleRegion {
  kUnrestricted,  // gamma, delta uniform in [0, pi/2]; all strategy angles uniform
  kClassical,     // gamma = delta = 0
  kPureTheta,     // theta_k in {0, pi}; everything else uniform
  kMaximal,       // gamma = delta = pi/2
};

std::string region_name(SampleRegion region);

struct ComparisonSample {
  double gamma = 0.0;
  double delta = 0.0;
  Profile profile;
  PayoffTriple reference;
  PayoffTriple candidate;
  PayoffTriple diff;  // candidate - reference
};

struct ComparisonReport {
  std::string reference_name;
  std::string candidate_name;
  SampleRegion region = SampleRegion::kUnrestricted;
  std::uint64_t seed = 0;
  std::vector<ComparisonSample> samples;
  double max_abs_diff = 0.0;
  double mean_abs_diff = 0.0;  // over all 3n components
};

enum class ClosedFormRoute {
  kGeneral,  // closed_form_payoffs vs expected_payoffs
  kMaximalVsGeneral,  // maximal_entanglement_payoffs vs closed_form_payoffs
  kMaximalVsOracle,   // maximal_entanglement_payoffs vs expected_payoffs
};

// Draws n configurations from the region with a generator seeded by `seed`
// and records reference and candidate payoffs per sample. Maximal routes force
// the region to kMaximal. Throws std::invalid_argument for n == 0.
ComparisonReport compare_to_oracle(SampleRegion region, std::size_t n, std::uint64_t seed,
                                   const PayoffTable& table = {},
                                   ClosedFormRoute route = ClosedFormRoute::kGeneral);

}  // namespace qpd
