#include "qpd/game.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qpd/angle.hpp"

namespace qpd {
namespace {

constexpr double kNegativeProbFloor = -1e-14;

void require_range(double v, double lo, double hi, const char* what) {
  if (!std::isfinite(v) || v < lo || v > hi) {
    throw std::invalid_argument(std::string(what) + " = " + format_double(v) +
                                " outside [" + format_double(lo) + ", " +
                                format_double(hi) + "]");
  }
}

void require_entanglement(double angle, const char* what) {
  require_range(angle, 0.0, kPi / 2, what);
}

Complex phase(double angle) { return std::polar(1.0, angle); }

}  // namespace

std::string_view player_name(Player p) {
  switch (p) {
    case Player::kAlice: return "alice";
    case Player::kBob: return "bob";
    case Player::kCharlie: return "charlie";
  }
  return "?";
}

StrategyParams::StrategyParams(double theta, double alpha, double beta)
    : theta_(theta), alpha_(alpha), beta_(beta) {
  require_range(theta, 0.0, kPi, "theta");
  require_range(alpha, -kPi, kPi, "alpha");
  require_range(beta, -kPi, kPi, "beta");
}

const StrategyParams& Profile::operator[](Player p) const {
  switch (p) {
    case Player::kAlice: return alice;
    case Player::kBob: return bob;
    case Player::kCharlie: return charlie;
  }
  throw std::out_of_range("Profile: bad player");
}

StrategyParams& Profile::operator[](Player p) {
  return const_cast<StrategyParams&>(std::as_const(*this)[p]);
}

double PayoffTriple::operator[](Player p) const {
  switch (p) {
    case Player::kAlice: return alice;
    case Player::kBob: return bob;
    case Player::kCharlie: return charlie;
  }
  throw std::out_of_range("PayoffTriple: bad player");
}

double& PayoffTriple::operator[](Player p) {
  switch (p) {
    case Player::kAlice: return alice;
    case Player::kBob: return bob;
    case Player::kCharlie: return charlie;
  }
  throw std::out_of_range("PayoffTriple: bad player");
}

double PayoffTriple::max_abs_diff(const PayoffTriple& other) const {
  return std::max({std::abs(alice - other.alice), std::abs(bob - other.bob),
                   std::abs(charlie - other.charlie)});
}

std::string outcome_label(std::size_t index) {
  if (index >= kOutcomes) throw std::out_of_range("outcome index out of range");
  std::string s(3, '0');
  for (std::size_t bit = 0; bit < 3; ++bit) {
    if ((index >> (2 - bit)) & 1) s[bit] = '1';
  }
  return s;
}

std::size_t outcome_index(std::string_view label) {
  if (label.size() != 3) {
    throw std::invalid_argument("outcome label must have 3 characters: '" + std::string(label) + "'");
  }
  std::size_t index = 0;
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("outcome label must be binary: '" + std::string(label) + "'");
    }
    index = index * 2 + static_cast<std::size_t>(c - '0');
  }
  return index;
}

PayoffTable::PayoffTable()
    : entries_{{
          {3, 3, 3},  // 000
          {2, 2, 5},  // 001
          {2, 5, 2},  // 010
          {0, 4, 4},  // 011
          {5, 2, 2},  // 100
          {4, 0, 4},  // 101
          {4, 4, 0},  // 110
          {1, 1, 1},  // 111
      }} {}

PayoffTable::PayoffTable(const std::array<PayoffTriple, kOutcomes>& entries)
    : entries_(entries) {
  for (const auto& t : entries_) {
    if (!std::isfinite(t.alice) || !std::isfinite(t.bob) || !std::isfinite(t.charlie)) {
      throw std::invalid_argument("PayoffTable: non-finite payoff");
    }
  }
}

const PayoffTriple& PayoffTable::at(std::string_view label) const {
  return entries_[outcome_index(label)];
}

double PayoffTable::min_payoff() const {
  double lo = entries_[0].alice;
  for (const auto& t : entries_) lo = std::min({lo, t.alice, t.bob, t.charlie});
  return lo;
}

double PayoffTable::max_payoff() const {
  double hi = entries_[0].alice;
  for (const auto& t : entries_) hi = std::max({hi, t.alice, t.bob, t.charlie});
  return hi;
}

GameConfig::GameConfig(double gamma, double delta, PayoffTable payoffs)
    : gamma_(gamma), delta_(delta), payoffs_(std::move(payoffs)) {
  require_entanglement(gamma, "gamma");
  require_entanglement(delta, "delta");
}

double OutcomeDistribution::sum() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

StateVector initial_state(double gamma) {
  require_entanglement(gamma, "gamma");
  std::vector<Complex> amps(8);
  amps[0] = std::cos(gamma / 2);
  amps[7] = Complex(0.0, std::sin(gamma / 2));
  return StateVector(std::move(amps));
}

SquareOperator strategy_unitary(const StrategyParams& p) {
  const double c = std::cos(p.theta() / 2);
  const double s = std::sin(p.theta() / 2);
  // Column j holds the image of |j>.
  return SquareOperator(2, {c * phase(p.alpha()), s * phase(kPi / 2 + p.beta()),
                            s * phase(kPi / 2 - p.beta()), c * phase(-p.alpha())});
}

std::vector<StateVector> measurement_basis(double delta) {
  require_entanglement(delta, "delta");
  const double c = std::cos(delta / 2);
  const double s = std::sin(delta / 2);
  std::vector<StateVector> basis;
  basis.reserve(kOutcomes);
  for (std::size_t b = 0; b < kOutcomes; ++b) {
    // Partner outcome is the bitwise complement. Bob's bit decides the sign:
    // 000/111/001/110 take +i, 010/101/011/100 take -i.
    const std::size_t partner = 7 - b;
    const bool bob_differs_from_alice = ((b >> 2) & 1) != ((b >> 1) & 1);
    const double sign = bob_differs_from_alice ? -1.0 : 1.0;
    std::vector<Complex> amps(8);
    amps[b] = c;
    amps[partner] = Complex(0.0, sign * s);
    basis.emplace_back(std::move(amps));
  }
  return basis;
}

SquareOperator payoff_operator(double delta, Player player, const PayoffTable& table) {
  const auto basis = measurement_basis(delta);
  SquareOperator acc = SquareOperator::zero(8);
  for (std::size_t b = 0; b < kOutcomes; ++b) {
    acc = add(acc, scale(table.payoff(b, player), outer(basis[b])));
  }
  return acc;
}

SquareOperator final_density(double gamma, const Profile& profile) {
  const SquareOperator joint =
      tensor3(strategy_unitary(profile.alice), strategy_unitary(profile.bob),
              strategy_unitary(profile.charlie));
  const SquareOperator rho_in = outer(initial_state(gamma));
  return multiply(multiply(joint, rho_in), adjoint(joint));
}

OutcomeDistribution outcome_distribution(const GameConfig& config, const Profile& profile) {
  const SquareOperator rho = final_density(config.gamma(), profile);
  const auto basis = measurement_basis(config.delta());
  OutcomeDistribution dist;
  for (std::size_t b = 0; b < kOutcomes; ++b) {
    double p = expectation(rho, basis[b]).real();
    if (p < 0.0) {
      if (p < kNegativeProbFloor) {
        throw std::runtime_error("outcome_distribution: probability " + format_double(p) +
                                 " for outcome " + outcome_label(b));
      }
      p = 0.0;
    }
    dist.probs[b] = p;
  }
  return dist;
}

PayoffTriple expected_payoffs(const GameConfig& config, const Profile& profile) {
  const OutcomeDistribution dist = outcome_distribution(config, profile);
  PayoffTriple out;
  for (Player k : kPlayers) {
    double v = 0.0;
    for (std::size_t b = 0; b < kOutcomes; ++b) v += config.payoffs().payoff(b, k) * dist.probs[b];
    out[k] = v;
  }
  return out;
}

PayoffTriple expected_payoffs(const GameConfig& config, const StrategyParams& alice,
                              const StrategyParams& bob, const StrategyParams& charlie) {
  return expected_payoffs(config, Profile{alice, bob, charlie});
}

PayoffTriple payoffs_by_trace(const GameConfig& config, const Profile& profile) {
  const SquareOperator rho = final_density(config.gamma(), profile);
  PayoffTriple out;
  for (Player k : kPlayers) {
    out[k] = trace(multiply(payoff_operator(config.delta(), k, config.payoffs()), rho)).real();
  }
  return out;
}

PayoffTriple classical_payoff(const PayoffTable& table, const std::array<double, 3>& defect_probs) {
  for (double p : defect_probs) require_range(p, 0.0, 1.0, "defection probability");
  PayoffTriple out;
  for (std::size_t b = 0; b < kOutcomes; ++b) {
    double weight = 1.0;
    for (std::size_t player = 0; player < 3; ++player) {
      const bool defects = (b >> (2 - player)) & 1;
      weight *= defects ? defect_probs[player] : 1.0 - defect_probs[player];
    }
    for (Player k : kPlayers) out[k] += weight * table.payoff(b, k);
  }
  return out;
}

}  // namespace qpd
