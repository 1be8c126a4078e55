#include "qpd/comms.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>

#include "qpd/angle.hpp"

namespace qpd {
namespace {

using FixtureGrid = std::array<std::array<std::array<std::string_view, 3>, kColumns>, 4>;

// Rows: codewords 00, 01, 10, 11. Columns: (B,C) = (0,0), (pi,0), (0,pi), (pi,pi).
constexpr FixtureGrid kTable2 = {{
    {{{"3", "3", "3"}, {"2", "5", "2"}, {"2", "2", "5"}, {"0", "4", "4"}}},
    {{{"3/4", "7/4", "7/4"}, {"7/2", "1/2", "17/4"}, {"7/2", "17/4", "1/2"}, {"9/2", "9/4", "9/4"}}},
    {{{"1/2", "5/2", "5/2"}, {"3", "1", "9/2"}, {"3", "9/2", "1"}, {"4", "5/2", "5/2"}}},
    {{{"5", "2", "2"}, {"4", "4", "0"}, {"4", "0", "4"}, {"1", "1", "1"}}},
}};

constexpr FixtureGrid kTable3 = {{
    {{{"2", "2", "2"}, {"3", "5/2", "3"}, {"3", "3", "5/2"}, {"5/2", "3", "3"}}},
    {{{"17/8", "9/4", "9/4"}, {"3", "21/8", "23/8"}, {"3", "23/8", "21/8"}, {"19/8", "11/4", "11/4"}}},
    {{{"9/4", "5/2", "5/2"}, {"3", "11/4", "11/4"}, {"3", "11/4", "11/4"}, {"9/4", "5/2", "5/2"}}},
    {{{"5/2", "3", "3"}, {"3", "3", "5/2"}, {"3", "5/2", "3"}, {"2", "2", "2"}}},
}};

double parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad rational '" + std::string(s) + "'");
    }
    return static_cast<double>(v);
  };
  if (slash == std::string_view::npos) return parse_int(text);
  return parse_int(text.substr(0, slash)) / parse_int(text.substr(slash + 1));
}

bool matches(std::span<const double> a, std::span<const double> b, double tol) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

const std::array<Codeword, 4>& codewords() {
  static const std::array<Codeword, 4> kCodewords = {{
      {"00", "U_A(0,0,0)", StrategyParams(0.0, 0.0, 0.0)},
      {"01", "U_A(pi/3,pi/2,pi/2)", StrategyParams(kPi / 3, kPi / 2, kPi / 2)},
      {"10", "U_A(pi/2,pi/2,pi/2)", StrategyParams(kPi / 2, kPi / 2, kPi / 2)},
      {"11", "U_A(pi,pi,pi)", StrategyParams(kPi, kPi, kPi)},
  }};
  return kCodewords;
}

std::size_t codeword_index(std::string_view bits) {
  const auto& all = codewords();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].bits == bits) return i;
  }
  throw std::invalid_argument("unknown codeword '" + std::string(bits) +
                              "' (expected 00, 01, 10 or 11)");
}

StrategyParams restricted_strategy(double theta) { return StrategyParams(theta, 0.0, kPi / 2); }

ColumnMove column_move(std::size_t column) {
  if (column >= kColumns) throw std::out_of_range("column index out of range");
  return ColumnMove{(column & 1) ? kPi : 0.0, (column & 2) ? kPi : 0.0};
}

std::string column_label(std::size_t column) {
  const ColumnMove m = column_move(column);
  auto t = [](double th) { return th == 0.0 ? std::string("0") : std::string("pi"); };
  return "B=" + t(m.theta_bob) + ",C=" + t(m.theta_charlie);
}

std::size_t column_index(double theta_bob, double theta_charlie) {
  auto bit = [](double th, const char* who) -> std::size_t {
    if (th == 0.0) return 0;
    if (th == kPi) return 1;
    throw std::invalid_argument(std::string(who) + " theta must be 0 or pi, got " +
                                format_double(th));
  };
  return bit(theta_bob, "bob") | (bit(theta_charlie, "charlie") << 1);
}

std::string visibility_name(Visibility v) {
  switch (v) {
    case Visibility::kOwn: return "own";
    case Visibility::kPair: return "pair";
    case Visibility::kTriple: return "triple";
  }
  return "?";
}

Visibility parse_visibility(std::string_view text) {
  if (text == "own") return Visibility::kOwn;
  if (text == "pair" || text == "bob-and-charlie") return Visibility::kPair;
  if (text == "triple" || text == "full-triple") return Visibility::kTriple;
  throw std::invalid_argument("unknown visibility '" + std::string(text) +
                              "' (expected own, pair or triple)");
}

std::size_t visible_components(Visibility v) {
  switch (v) {
    case Visibility::kOwn: return 1;
    case Visibility::kPair: return 2;
    case Visibility::kTriple: return 3;
  }
  return 0;
}

void ObservationModel::validate() const {
  if (rounding < 0 || rounding > 15) {
    throw std::invalid_argument("rounding must be between 0 and 15 decimal places");
  }
}

double ObservationModel::match_tol() const {
  validate();
  return 0.5 * std::pow(10.0, -rounding) * (1.0 + 1e-9);
}

std::vector<double> ObservationModel::observe(const PayoffTriple& p) const {
  switch (visibility) {
    case Visibility::kOwn: return {p.bob};
    case Visibility::kPair: return {p.bob, p.charlie};
    case Visibility::kTriple: return {p.alice, p.bob, p.charlie};
  }
  return {};
}

std::string provenance_name(Provenance p) {
  return p == Provenance::kOracle ? "oracle" : "printed-fixture";
}

ProtocolTable protocol_table(double gamma, double delta, const PayoffTable& payoffs) {
  const GameConfig config(gamma, delta, payoffs);
  ProtocolTable table;
  table.name = "oracle(gamma=" + format_double(gamma) + ",delta=" + format_double(delta) + ")";
  table.provenance = Provenance::kOracle;
  table.gamma = gamma;
  table.delta = delta;
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < kColumns; ++col) {
      const ColumnMove m = column_move(col);
      table.entries[row][col] =
          expected_payoffs(config, codewords()[row].params, restricted_strategy(m.theta_bob),
                           restricted_strategy(m.theta_charlie));
    }
  }
  return table;
}

std::string fixture_name(FixtureId id) { return id == FixtureId::kTable2 ? "table2" : "table3"; }

FixtureId parse_fixture(std::string_view text) {
  if (text == "table2") return FixtureId::kTable2;
  if (text == "table3") return FixtureId::kTable3;
  throw std::invalid_argument("unknown fixture '" + std::string(text) +
                              "' (expected table2 or table3)");
}

const FixtureGrid& fixture_text(FixtureId id) {
  return id == FixtureId::kTable2 ? kTable2 : kTable3;
}

ProtocolTable printed_fixture(FixtureId id) {
  const FixtureGrid& text = fixture_text(id);
  ProtocolTable table;
  table.name = fixture_name(id);
  table.provenance = Provenance::kPrintedFixture;
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < kColumns; ++col) {
      const auto& cell = text[row][col];
      table.entries[row][col] = {parse_rational(cell[0]), parse_rational(cell[1]),
                                 parse_rational(cell[2])};
    }
  }
  return table;
}

DecodeResult decode(const ProtocolTable& table, std::size_t column,
                    std::span<const double> observed, const ObservationModel& model) {
  if (column >= kColumns) throw std::out_of_range("decode: column index out of range");
  if (observed.size() != visible_components(model.visibility)) {
    throw std::invalid_argument("decode: " + visibility_name(model.visibility) +
                                " visibility expects " +
                                std::to_string(visible_components(model.visibility)) +
                                " observed payoffs, got " + std::to_string(observed.size()));
  }
  const double tol = model.match_tol();
  DecodeResult result;
  for (std::size_t row = 0; row < 4; ++row) {
    const auto visible = model.observe(table.entries[row][column]);
    if (matches(visible, observed, tol)) result.candidates.push_back(row);
  }
  if (result.candidates.empty()) {
    throw DecodeError("decode: observed payoffs match no codeword in column " +
                      column_label(column) + " of " + table.name);
  }
  result.bits_resolved = 2.0 - std::log2(static_cast<double>(result.candidates.size()));
  return result;
}

std::array<double, kColumns> column_information(const ProtocolTable& table,
                                                const ObservationModel& model) {
  std::array<double, kColumns> out{};
  for (std::size_t col = 0; col < kColumns; ++col) {
    double total = 0.0;
    for (std::size_t row = 0; row < 4; ++row) {
      const auto observed = model.observe(table.entries[row][col]);
      total += decode(table, col, observed, model).bits_resolved;
    }
    out[col] = total / 4.0;
  }
  return out;
}

double information_bits(const ProtocolTable& table, const ObservationModel& model) {
  const auto per_column = column_information(table, model);
  return *std::min_element(per_column.begin(), per_column.end());
}

SimulationResult simulate(const GameConfig& config, std::size_t codeword, std::size_t column,
                          const ObservationModel& model) {
  if (codeword >= 4) throw std::out_of_range("simulate: codeword index out of range");
  const ColumnMove m = column_move(column);
  SimulationResult out;
  out.codeword = codeword;
  out.column = column;
  out.payoffs = expected_payoffs(config, codewords()[codeword].params,
                                 restricted_strategy(m.theta_bob),
                                 restricted_strategy(m.theta_charlie));
  out.observed = model.observe(out.payoffs);
  const ProtocolTable table = protocol_table(config.gamma(), config.delta(), config.payoffs());
  out.decoded = decode(table, column, out.observed, model);
  return out;
}

InfoRelation info_relation_report(const std::string& source,
                                  const std::array<ProtocolTable, 4>& tables,
                                  const ObservationModel& model) {
  InfoRelation rel;
  rel.source = source;
  rel.model = model;
  for (std::size_t i = 0; i < 4; ++i) rel.info[i] = information_bits(tables[i], model);
  const double pp = rel.info[0], pe = rel.info[1], ep = rel.info[2], ee = rel.info[3];
  constexpr double kTol = 1e-12;
  const std::string tag = " [" + source + ", " + visibility_name(model.visibility) + "]";

  auto add = [&](std::string name, bool ok, double measured, std::string detail) {
    rel.verdicts.push_back(Verdict{std::move(name) + tag, ok, false, measured, std::move(detail)});
  };
  add("I_PP = I_EE", std::abs(pp - ee) <= kTol, std::abs(pp - ee),
      "I_PP=" + format_double(pp) + " I_EE=" + format_double(ee));
  add("I_PE = I_EP", std::abs(pe - ep) <= kTol, std::abs(pe - ep),
      "I_PE=" + format_double(pe) + " I_EP=" + format_double(ep));
  const double margin = std::min(pp, ee) - std::max(pe, ep);
  add("{I_PP, I_EE} > {I_PE, I_EP}", margin > kTol, margin,
      "min(I_PP,I_EE) - max(I_PE,I_EP) = " + format_double(margin));
  const double half_gap = std::max(std::abs(pe - pp / 2), std::abs(ep - ee / 2));
  add("I_PE = I_PP/2 and I_EP = I_EE/2", half_gap <= kTol, half_gap,
      "largest deviation from half " + format_double(half_gap));
  return rel;
}

std::array<ProtocolTable, 4> oracle_case_tables(const PayoffTable& payoffs) {
  return {protocol_table(0.0, 0.0, payoffs), protocol_table(0.0, kPi / 2, payoffs),
          protocol_table(kPi / 2, 0.0, payoffs), protocol_table(kPi / 2, kPi / 2, payoffs)};
}

std::array<ProtocolTable, 4> fixture_case_tables() {
  const ProtocolTable t2 = printed_fixture(FixtureId::kTable2);
  const ProtocolTable t3 = printed_fixture(FixtureId::kTable3);
  return {t2, t3, t3, t2};
}

TableComparison compare_tables(const ProtocolTable& fixture, const ProtocolTable& oracle) {
  TableComparison cmp;
  cmp.fixture = fixture.name;
  cmp.gamma = oracle.gamma.value_or(0.0);
  cmp.delta = oracle.delta.value_or(0.0);
  for (std::size_t row = 0; row < 4; ++row) {
    for (std::size_t col = 0; col < kColumns; ++col) {
      const PayoffTriple& f = fixture.entries[row][col];
      const PayoffTriple& o = oracle.entries[row][col];
      cmp.diff[row][col] = {o.alice - f.alice, o.bob - f.bob, o.charlie - f.charlie};
      const double d = o.max_abs_diff(f);
      cmp.max_abs_diff = std::max(cmp.max_abs_diff, d);
      if (d > kPayoffTol) ++cmp.mismatched_entries;
    }
  }
  return cmp;
}

}  // namespace qpd
