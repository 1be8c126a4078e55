#pragma once

// Two-bit signalling through the arbiter. Alice encodes one of four codewords
// as her strategy; Bob and Charlie, restricted to theta in {0, pi} with fixed
// phases (alpha = 0, beta = pi/2), read the codeword back from payoffs.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpd/game.hpp"
#include "qpd/verdict.hpp"

namespace qpd {

struct Codeword {
  std::string bits;   // "00", "01", "10", "11"
  std::string label;  // e.g. "U_A(pi/3,pi/2,pi/2)"
  StrategyParams params;
};

// 00: (0,0,0), 01: (pi/3,pi/2,pi/2), 10: (pi/2,pi/2,pi/2), 11: (pi,pi,pi).
const std::array<Codeword, 4>& codewords();
std::size_t codeword_index(std::string_view bits);

StrategyParams restricted_strategy(double theta);  // (theta, 0, pi/2)

/// A (Bob, Charlie) pair of thetas. Columns run in the printed order
/// (0,0), (pi,0), (0,pi), (pi,pi): Bob varies fastest.
struct ColumnMove {
  double theta_bob = 0.0;
  double theta_charlie = 0.0;
};

inline constexpr std::size_t kColumns = 4;
ColumnMove column_move(std::size_t column);
std::string column_label(std::size_t column);
// Throws std::invalid_argument unless both thetas are exactly 0 or pi.
std::size_t column_index(double theta_bob, double theta_charlie);

enum class Visibility {
  kOwn,     // Bob's payoff only
  kPair,    // Bob's and Charlie's payoffs
  kTriple,  // all three payoffs
};

std::string visibility_name(Visibility v);
Visibility parse_visibility(std::string_view text);
std::size_t visible_components(Visibility v);

/// Two payoffs match at `rounding` decimals when they differ by at most half a
/// unit in the last kept place. Fewer decimals can only merge more rows.
struct ObservationModel {
  Visibility visibility = Visibility::kPair;
  int rounding = 9;

  void validate() const;  // rounding in [0, 15]
  double match_tol() const;
  std::vector<double> observe(const PayoffTriple& payoffs) const;
};

enum class Provenance { kOracle, kPrintedFixture };
std::string provenance_name(Provenance p);

struct ProtocolTable {
  std::string name;
  Provenance provenance = Provenance::kOracle;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::array<std::array<PayoffTriple, kColumns>, 4> entries{};  // [codeword][column]
};

// Trace-rule payoffs for every codeword and column.
ProtocolTable protocol_table(double gamma, double delta, const PayoffTable& payoffs = {});

enum class FixtureId { kTable2, kTable3 };
std::string fixture_name(FixtureId id);
FixtureId parse_fixture(std::string_view text);

// The published payoff tables exactly as printed. Table 2 is captioned for
// gamma = delta = 0 and gamma = delta = pi/2, Table 3 for (0, pi/2) and (pi/2, 0).
ProtocolTable printed_fixture(FixtureId id);
// The printed rational strings, e.g. "17/8", [codeword][column][player].
const std::array<std::array<std::array<std::string_view, 3>, kColumns>, 4>& fixture_text(
    FixtureId id);

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecodeResult {
  std::vector<std::size_t> candidates;  // codeword indices
  double bits_resolved = 0.0;           // 2 - log2 |candidates|
};

// Codewords whose entry in `column` matches `observed` under the model.
// `observed` carries visible_components(model.visibility) values. Throws
// DecodeError when nothing matches.
DecodeResult decode(const ProtocolTable& table, std::size_t column,
                    std::span<const double> observed, const ObservationModel& model);

// Mean bits resolved over the four equiprobable codewords, per column.
std::array<double, kColumns> column_information(const ProtocolTable& table,
                                                const ObservationModel& model);
// Worst case over columns.
double information_bits(const ProtocolTable& table, const ObservationModel& model);

struct SimulationResult {
  std::size_t codeword = 0;
  std::size_t column = 0;
  PayoffTriple payoffs;
  std::vector<double> observed;
  DecodeResult decoded;
};

// Alice sends `codeword`, Bob and Charlie play `column`; the observers decode
// against the oracle table of the same configuration.
SimulationResult simulate(const GameConfig& config, std::size_t codeword, std::size_t column,
                          const ObservationModel& model);

struct InfoRelation {
  std::string source;
  ObservationModel model;
  // I_PP, I_PE, I_EP, I_EE
  std::array<double, 4> info{};
  std::vector<Verdict> verdicts;
};

// Tables ordered PP, PE, EP, EE. Checks I_PP = I_EE, I_PE = I_EP,
// min(I_PP, I_EE) > max(I_PE, I_EP) and the "half the information" claim.
InfoRelation info_relation_report(const std::string& source,
                                  const std::array<ProtocolTable, 4>& tables,
                                  const ObservationModel& model);

std::array<ProtocolTable, 4> oracle_case_tables(const PayoffTable& payoffs = {});
std::array<ProtocolTable, 4> fixture_case_tables();

struct TableComparison {
  std::string fixture;
  double gamma = 0.0;
  double delta = 0.0;
  std::array<std::array<PayoffTriple, kColumns>, 4> diff{};  // oracle - fixture
  double max_abs_diff = 0.0;
  std::size_t mismatched_entries = 0;  // entries off by more than kPayoffTol
};

TableComparison compare_tables(const ProtocolTable& fixture, const ProtocolTable& oracle);

}  // namespace qpd
