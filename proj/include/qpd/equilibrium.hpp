#pragma once

// Grid-based best responses and Nash certificates, plus the scan over the
// four product/entangled (initial state, measurement basis) combinations.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "qpd/game.hpp"
#include "qpd/verdict.hpp"

namespace qpd {

/// Per-player strategy grid. theta spans [0, pi] and both phases span
/// [-pi, pi], endpoints included. Counts must place exact grid points on
/// 0, pi/2, pi (theta) and -pi, 0, pi/2, pi (phases): theta_points odd and
/// >= 3, phase counts = 4j + 1 with j >= 1.
struct GridSpec {
  std::size_t theta_points = 25;
  std::size_t alpha_points = 17;
  std::size_t beta_points = 17;

  void validate() const;  // throws std::invalid_argument
  std::vector<double> theta_values() const;
  std::vector<double> alpha_values() const;
  std::vector<double> beta_values() const;
  std::size_t size() const { return theta_points * alpha_points * beta_points; }
};

// Every grid strategy in lexicographic (theta, alpha, beta) order.
std::vector<StrategyParams> grid_strategies(const GridSpec& grid);

enum class PayoffCase { kPP, kPE, kEP, kEE };

// First letter: initial state (gamma), second: measurement basis (delta).
// P when the parameter is exactly zero, E otherwise.
PayoffCase classify(const GameConfig& config);
std::string case_label(PayoffCase c);

// The player's payoff-maximizing grid strategy with the other two players
// held at `profile`. Near-ties (within 1e-12) go to the lexicographically
// smallest (theta, alpha, beta).
StrategyParams best_response(Player player, const Profile& profile, const GameConfig& config,
                             const GridSpec& grid);

struct EquilibriumReport {
  double gamma = 0.0;
  double delta = 0.0;
  PayoffCase payoff_case = PayoffCase::kPP;
  Profile profile;
  PayoffTriple payoffs;
  // Largest payoff gain from a unilateral grid deviation; never negative.
  std::array<double, 3> gaps{};
  std::array<StrategyParams, 3> best_deviation{};
  double tol = 0.0;
  bool is_nash = false;
};

EquilibriumReport verify_nash(const Profile& profile, const GameConfig& config,
                              const GridSpec& grid, double tol);

// How Bob's and Charlie's phases are filled in for profiles that only name
// Alice's phases.
enum class OpponentPhases {
  kRestricted,   // alpha = 0, beta = pi/2 (the communication-protocol restriction)
  kMirrorAlice,  // same phases as Alice: alpha = pi, beta = pi
};

std::string opponent_phases_name(OpponentPhases phases);

// Common profile with every player at `theta`: Alice (theta, pi, pi), Bob and
// Charlie per `phases`.
Profile case_profile(double theta, OpponentPhases phases);

struct CaseEntry {
  std::string theta_label;  // "pi", "pi/2", "0"
  EquilibriumReport report;
};

struct CaseResult {
  PayoffCase payoff_case = PayoffCase::kPP;
  std::vector<CaseEntry> entries;
};

struct FourCaseScan {
  OpponentPhases phases = OpponentPhases::kRestricted;
  double tol = 0.0;
  std::array<CaseResult, 4> cases;  // PP, PE, EP, EE
  std::vector<Verdict> verdicts;
};

// Evaluates PP at (0,0) with theta = pi, PE at (0, pi/2) and EP at (pi/2, 0)
// with theta in {pi/2, 0}, EE at (pi/2, pi/2) with theta = 0, certifies each
// profile on the grid and checks the ordering PP < PE = EP < EE.
FourCaseScan four_case_scan(const PayoffTable& table, const GridSpec& grid,
                            OpponentPhases phases = OpponentPhases::kRestricted,
                            double tol = kPayoffTol);

}  // namespace qpd
