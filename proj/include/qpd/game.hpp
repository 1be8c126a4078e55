#pragma once

// Three-player quantum Prisoner's Dilemma: the shared entangled state, the
// players' local strategy unitaries, the arbiter's entangled measurement basis
// and the trace-rule expected payoffs. expected_payoffs() is the reference
// computation every other payoff route in the project is checked against.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qpd/linalg.hpp"

namespace qpd {

enum class Player : std::size_t { kAlice = 0, kBob = 1, kCharlie = 2 };

inline constexpr std::array<Player, 3> kPlayers = {Player::kAlice, Player::kBob,
                                                   Player::kCharlie};

std::string_view player_name(Player p);

/// One player's (theta, alpha, beta). theta in [0, pi], alpha and beta in
/// [-pi, pi]; anything else throws std::invalid_argument.
class StrategyParams {
 public:
  StrategyParams() = default;
  StrategyParams(double theta, double alpha, double beta);

  double theta() const { return theta_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  friend bool operator==(const StrategyParams&, const StrategyParams&) = default;

 private:
  double theta_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
};

struct Profile {
  StrategyParams alice;
  StrategyParams bob;
  StrategyParams charlie;

  const StrategyParams& operator[](Player p) const;
  StrategyParams& operator[](Player p);
};

struct PayoffTriple {
  double alice = 0.0;
  double bob = 0.0;
  double charlie = 0.0;

  double operator[](Player p) const;
  double& operator[](Player p);
  double max_abs_diff(const PayoffTriple& other) const;
  friend bool operator==(const PayoffTriple&, const PayoffTriple&) = default;
};

// Outcome index b = 4l + 2m + n for the label "lmn" (Alice, Bob, Charlie).
inline constexpr std::size_t kOutcomes = 8;
std::string outcome_label(std::size_t index);
std::size_t outcome_index(std::string_view label);

/// Payoff triple for each of the 8 measurement outcomes. Default-constructed
/// tables hold the standard three-player Prisoner's Dilemma:
///
///             Charlie C                Charlie D
///           Bob C     Bob D          Bob C     Bob D
///  Alice C  (3,3,3)   (2,5,2)        (2,2,5)   (0,4,4)
///  Alice D  (5,2,2)   (4,4,0)        (4,0,4)   (1,1,1)
class PayoffTable {
 public:
  PayoffTable();
  explicit PayoffTable(const std::array<PayoffTriple, kOutcomes>& entries);

  const PayoffTriple& operator[](std::size_t index) const { return entries_[index]; }
  const PayoffTriple& at(std::string_view label) const;
  double payoff(std::size_t index, Player p) const { return entries_[index][p]; }

  double min_payoff() const;
  double max_payoff() const;

  friend bool operator==(const PayoffTable&, const PayoffTable&) = default;

 private:
  std::array<PayoffTriple, kOutcomes> entries_;
};

/// Entanglement of the initial state (gamma) and of the measurement basis
/// (delta), both in [0, pi/2].
class GameConfig {
 public:
  GameConfig(double gamma, double delta, PayoffTable payoffs = {});

  double gamma() const { return gamma_; }
  double delta() const { return delta_; }
  const PayoffTable& payoffs() const { return payoffs_; }

 private:
  double gamma_;
  double delta_;
  PayoffTable payoffs_;
};

struct OutcomeDistribution {
  std::array<double, kOutcomes> probs{};

  double sum() const;
};

// cos(gamma/2)|000> + i sin(gamma/2)|111>
StateVector initial_state(double gamma);

// cos(theta/2) R + sin(theta/2) P with
//   R|0> = e^{i alpha}|0>,            R|1> = e^{-i alpha}|1>,
//   P|0> = e^{i(pi/2 - beta)}|1>,     P|1> = e^{i(pi/2 + beta)}|0>.
SquareOperator strategy_unitary(const StrategyParams& p);

// The arbiter's basis |psi_lmn>, indexed by outcome. Pairs (000,111) and
// (001,110) mix with +i sin(delta/2); (010,101) and (011,100) with -i.
std::vector<StateVector> measurement_basis(double delta);

// sum_lmn $^k_lmn |psi_lmn><psi_lmn|
SquareOperator payoff_operator(double delta, Player player, const PayoffTable& table);

// (UA (x) UB (x) UC) rho_in (UA (x) UB (x) UC)^dagger
SquareOperator final_density(double gamma, const Profile& profile);

// Born-rule probabilities <psi_lmn| rho_f |psi_lmn>. Roundoff negatives down to
// -1e-14 are clamped to zero; anything more negative throws std::runtime_error.
OutcomeDistribution outcome_distribution(const GameConfig& config, const Profile& profile);

// Expected payoff of each player under the outcome distribution.
PayoffTriple expected_payoffs(const GameConfig& config, const Profile& profile);
PayoffTriple expected_payoffs(const GameConfig& config, const StrategyParams& alice,
                              const StrategyParams& bob, const StrategyParams& charlie);

// Same quantity via Tr(P^k rho_f) on the full payoff operators.
PayoffTriple payoffs_by_trace(const GameConfig& config, const Profile& profile);

// Classical mixed play: each player defects independently with the given
// probability. Throws std::invalid_argument for probabilities outside [0, 1].
PayoffTriple classical_payoff(const PayoffTable& table, const std::array<double, 3>& defect_probs);

}  // namespace qpd
