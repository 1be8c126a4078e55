#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "qpd/comms.hpp"
#include "qpd/sampling.hpp"
#include "support/helpers.hpp"
#include "support/printed_tables.hpp"

using namespace qpd;
using qpd::testing::check_triple;

namespace {

void check_fixture(FixtureId id, const std::array<std::string, 4>& rows) {
  const auto table = printed_fixture(id);
  const auto& text = fixture_text(id);
  CHECK(table.provenance == Provenance::kPrintedFixture);
  int checked = 0;
  for (std::size_t r = 0; r < 4; ++r) {
    const auto cols = printed::split_row(rows[r]);
    for (std::size_t c = 0; c < 4; ++c) {
      for (std::size_t k = 0; k < 3; ++k) {
        CAPTURE(r);
        CAPTURE(c);
        CHECK(std::string(text[r][c][k]) == cols[c][k]);
        CHECK(table.entries[r][c][kPlayers[k]] == printed::rational(cols[c][k]));
      }
      ++checked;
    }
  }
  CHECK(checked == 16);
}

std::vector<double> vec(std::initializer_list<double> v) { return v; }

}  // namespace

TEST_CASE("codewords") {
  const auto& cw = codewords();
  CHECK(cw[0].bits == "00");
  CHECK(cw[0].params == StrategyParams(0, 0, 0));
  CHECK(cw[1].params == StrategyParams(kPi / 3, kPi / 2, kPi / 2));
  CHECK(cw[2].params == StrategyParams(kPi / 2, kPi / 2, kPi / 2));
  CHECK(cw[3].params == StrategyParams(kPi, kPi, kPi));
  CHECK(codeword_index("10") == 2);
  CHECK_THROWS_AS(codeword_index("2"), std::invalid_argument);
  CHECK(restricted_strategy(kPi) == StrategyParams(kPi, 0, kPi / 2));
}

TEST_CASE("column order follows the printed layout") {
  CHECK(column_move(0).theta_bob == 0.0);
  CHECK(column_move(1).theta_bob == kPi);
  CHECK(column_move(1).theta_charlie == 0.0);
  CHECK(column_move(2).theta_bob == 0.0);
  CHECK(column_move(2).theta_charlie == kPi);
  CHECK(column_index(kPi, kPi) == 3);
  CHECK(column_index(0, kPi) == 2);
  CHECK_THROWS_AS(column_index(kPi / 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(column_move(4), std::out_of_range);
  CHECK(column_label(2) == "B=0,C=pi");
}

TEST_CASE("observation models") {
  CHECK(parse_visibility("own") == Visibility::kOwn);
  CHECK(parse_visibility("bob-and-charlie") == Visibility::kPair);
  CHECK(parse_visibility("full-triple") == Visibility::kTriple);
  CHECK_THROWS_AS(parse_visibility("alice"), std::invalid_argument);
  const ObservationModel m{Visibility::kPair, 3};
  CHECK(m.observe({1, 2, 3}) == vec({2, 3}));
  CHECK((ObservationModel{Visibility::kOwn, 3}.observe({1, 2, 3})) == vec({2}));
  CHECK_THROWS_AS((ObservationModel{Visibility::kPair, 16}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((ObservationModel{Visibility::kPair, -1}.validate()), std::invalid_argument);
}

TEST_CASE("oracle protocol table examples") {
  const auto t = protocol_table(0, 0);
  check_triple(t.entries[0][0], 3, 3, 3, kPayoffTol);
  check_triple(t.entries[3][0], 5, 2, 2, kPayoffTol);
  // Classical mixture 3/4 (3,3,3) + 1/4 (5,2,2); the printed table has (3/4,7/4,7/4).
  check_triple(t.entries[1][0], 3.5, 2.75, 2.75, kPayoffTol);
  CHECK(t.provenance == Provenance::kOracle);
}

TEST_CASE("oracle protocol tables at the product and maximal corners") {
  using Row = std::array<std::array<double, 3>, 4>;
  const std::array<Row, 2> pp_rows = {{
      {{{3.5, 2.75, 2.75}, {2.5, 4.75, 1.5}, {2.5, 1.5, 4.75}, {0.25, 3.25, 3.25}}},
      {{{4, 2.5, 2.5}, {3, 4.5, 1}, {3, 1, 4.5}, {0.5, 2.5, 2.5}}},
  }};
  const auto pp = protocol_table(0, 0);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      check_triple(pp.entries[r + 1][c], pp_rows[r][c][0], pp_rows[r][c][1], pp_rows[r][c][2],
                   kPayoffTol);

  const std::array<Row, 4> ee_rows = {{
      {{{3, 3, 3}, {2, 5, 2}, {4, 4, 0}, {5, 2, 2}}},
      {{{2, 1.25, 1.25}, {4, 1, 3}, {2, 2.75, 4.25}, {0.75, 3.75, 3.75}}},
      {{{3, 1.5, 1.5}, {4, 2, 2}, {2, 3.5, 3.5}, {1.5, 3.5, 3.5}}},
      {{{0, 4, 4}, {2, 2, 5}, {4, 0, 4}, {1, 1, 1}}},
  }};
  const auto ee = protocol_table(kPi / 2, kPi / 2);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      check_triple(ee.entries[r][c], ee_rows[r][c][0], ee_rows[r][c][1], ee_rows[r][c][2],
                   kPayoffTol);
}

TEST_CASE("fixture ingestion matches all 64 printed triples") {
  check_fixture(FixtureId::kTable2, printed::kTable2Rows);
  check_fixture(FixtureId::kTable3, printed::kTable3Rows);
}

TEST_CASE("fixture examples") {
  const auto t2 = printed_fixture(FixtureId::kTable2);
  const auto t3 = printed_fixture(FixtureId::kTable3);
  check_triple(t2.entries[2][0], 0.5, 2.5, 2.5, 0);
  check_triple(t3.entries[0][0], 2, 2, 2, 0);
  check_triple(t3.entries[1][column_index(0, kPi)], 3, 23.0 / 8, 21.0 / 8, 0);
  CHECK(parse_fixture("table3") == FixtureId::kTable3);
  CHECK_THROWS_AS(parse_fixture("table9"), std::invalid_argument);
}

TEST_CASE("mixed-entanglement tables agree with the printed Table 3") {
  const auto t3 = printed_fixture(FixtureId::kTable3);
  for (auto [g, d] : {std::pair{0.0, kPi / 2}, std::pair{kPi / 2, 0.0}}) {
    const auto cmp = compare_tables(t3, protocol_table(g, d));
    CHECK(cmp.mismatched_entries == 0);
    CHECK(cmp.max_abs_diff < kPayoffTol);
  }
  const auto t2 = printed_fixture(FixtureId::kTable2);
  CHECK(compare_tables(t2, protocol_table(0, 0)).mismatched_entries == 8);
  CHECK(compare_tables(t2, protocol_table(kPi / 2, kPi / 2)).mismatched_entries == 12);
}

TEST_CASE("worked decoding examples") {
  const auto t2 = printed_fixture(FixtureId::kTable2);
  const ObservationModel pair{Visibility::kPair, 9};

  const auto a = decode(t2, column_index(0, 0), vec({2, 2}), pair);
  REQUIRE(a.candidates.size() == 1);
  CHECK(codewords()[a.candidates[0]].bits == "11");
  CHECK(t2.entries[a.candidates[0]][0].alice == 5.0);
  CHECK(a.bits_resolved == 2.0);

  const auto b = decode(t2, column_index(kPi, kPi), vec({4, 4}), pair);
  REQUIRE(b.candidates.size() == 1);
  CHECK(codewords()[b.candidates[0]].bits == "00");
  CHECK(t2.entries[b.candidates[0]][3].alice == 0.0);
}

TEST_CASE("decoding errors") {
  const auto t2 = printed_fixture(FixtureId::kTable2);
  const ObservationModel pair{Visibility::kPair, 9};
  CHECK_THROWS_AS(decode(t2, 0, vec({9, 9}), pair), DecodeError);
  CHECK_THROWS_AS(decode(t2, 0, vec({2}), pair), std::invalid_argument);
  CHECK_THROWS_AS(decode(t2, 4, vec({2, 2}), pair), std::out_of_range);
}

TEST_CASE("an exact entry always decodes to include its own row") {
  SeededSampler rng(51);
  for (int i = 0; i < 40; ++i) {
    const auto t = protocol_table(rng.entanglement(), rng.entanglement());
    for (auto vis : {Visibility::kOwn, Visibility::kPair, Visibility::kTriple}) {
      const ObservationModel m{vis, 9};
      for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
          const auto d = decode(t, c, m.observe(t.entries[r][c]), m);
          CHECK(std::find(d.candidates.begin(), d.candidates.end(), r) != d.candidates.end());
        }
      }
    }
  }
}

TEST_CASE("simulation round-trips through decoding") {
  const ObservationModel triple{Visibility::kTriple, 9};
  for (auto [g, d] : {std::pair{0.0, 0.0}, std::pair{kPi / 2, kPi / 2}, std::pair{0.0, kPi / 2}}) {
    for (std::size_t cw = 0; cw < 4; ++cw) {
      for (std::size_t col = 0; col < 4; ++col) {
        const auto s = simulate(GameConfig(g, d), cw, col, triple);
        CHECK(std::find(s.decoded.candidates.begin(), s.decoded.candidates.end(), cw) !=
              s.decoded.candidates.end());
      }
    }
  }
}

TEST_CASE("information is monotone in visibility and rounding") {
  std::vector<ProtocolTable> tables = {printed_fixture(FixtureId::kTable2),
                                       printed_fixture(FixtureId::kTable3)};
  for (const auto& t : oracle_case_tables()) tables.push_back(t);
  SeededSampler rng(52);
  for (int i = 0; i < 10; ++i) tables.push_back(protocol_table(rng.entanglement(), rng.entanglement()));

  for (const auto& t : tables) {
    for (int dp = 0; dp <= 9; ++dp) {
      const double own = information_bits(t, {Visibility::kOwn, dp});
      const double pair = information_bits(t, {Visibility::kPair, dp});
      const double triple = information_bits(t, {Visibility::kTriple, dp});
      CHECK(own <= pair + 1e-12);
      CHECK(pair <= triple + 1e-12);
      CHECK(own >= 0.0);
      CHECK(triple <= 2.0);
      if (dp > 0) {
        for (auto vis : {Visibility::kOwn, Visibility::kPair, Visibility::kTriple}) {
          CHECK(information_bits(t, {vis, dp - 1}) <= information_bits(t, {vis, dp}) + 1e-12);
        }
      }
    }
  }
}

TEST_CASE("information examples") {
  CHECK(information_bits(printed_fixture(FixtureId::kTable2), {Visibility::kTriple, 9}) == 2.0);

  ProtocolTable flat;
  for (auto& row : flat.entries)
    for (auto& e : row) e = {1, 2, 3};
  CHECK(information_bits(flat, {Visibility::kTriple, 9}) == 0.0);

  // Two rows coincide in every column: half the codewords resolve 1 bit.
  ProtocolTable half;
  for (std::size_t r = 0; r < 4; ++r)
    for (auto& e : half.entries[r]) e = {double(r / 2), 0, 0};
  CHECK(information_bits(half, {Visibility::kTriple, 9}) == 1.0);
}

TEST_CASE("information relation report") {
  const ObservationModel triple{Visibility::kTriple, 9};
  const auto fx = info_relation_report("fixture", fixture_case_tables(), triple);
  for (double v : fx.info) CHECK(v == 2.0);
  REQUIRE(fx.verdicts.size() == 4);
  CHECK(fx.verdicts[0].passed);   // I_PP = I_EE
  CHECK(fx.verdicts[1].passed);   // I_PE = I_EP
  CHECK_FALSE(fx.verdicts[2].passed);
  CHECK_FALSE(fx.verdicts[3].passed);
  for (const auto& v : fx.verdicts) CHECK_FALSE(v.hard);

  const auto own = info_relation_report("oracle", oracle_case_tables(), {Visibility::kOwn, 9});
  CHECK(own.info[0] == 2.0);
  CHECK(own.info[1] == 2.0);
  CHECK(own.info[2] == 2.0);
  CHECK(own.info[3] == 1.5);
}
