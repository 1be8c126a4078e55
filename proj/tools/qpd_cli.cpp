// qpd: command-line front end for the three-player quantum Prisoner's Dilemma
// engine.
//
//   qpd payoff --gamma pi/2 --delta pi/2 --alice 0,pi,pi
//   qpd table  --gamma 0 --delta 0 --format csv
//   qpd nash   --gamma 0 --delta 0 --alice pi,pi,pi --bob pi,0,pi/2 --charlie pi,0,pi/2
//   qpd nash   --four-case
//   qpd comm decode --fixture table2 --common 0,0 --observed 2,2
//   qpd comm simulate --gamma 0 --delta pi/2 --common pi,pi
//   qpd verify --out bundle.json
//
// Exit status: 0 on success, 1 when a hard verification check fails, 2 on
// invalid input.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpd/angle.hpp"
#include "qpd/comms.hpp"
#include "qpd/equilibrium.hpp"
#include "qpd/game.hpp"
#include "qpd/report.hpp"
#include "qpd/sampling.hpp"
#include "qpd/verify.hpp"

namespace {

using qpd::Json;

constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string gamma = "0";
  std::string delta = "0";
  std::string alice = "0,0,0";
  std::string bob = "0,0,0";
  std::string charlie = "0,0,0";
  std::string grid = "25,17,17";
  std::string format = "json";
  std::string out;
  std::string payoffs_file;
  std::string fixture;
  std::string common = "0,0";
  std::string observed;
  std::string codeword;
  std::string visibility;
  std::string phases = "restricted";
  int rounding = 9;
  double tol = qpd::kPayoffTol;
  bool four_case = false;
  std::optional<std::uint64_t> seed;
};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QPD_SEED")) {
    std::uint64_t v = 0;
    const std::string s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("QPD_SEED must be an unsigned integer, got '" + s + "'");
    }
    return v;
  }
  return qpd::kDefaultSeed;
}

double parse_entanglement(const std::string& text, const char* name) {
  const double v = qpd::Angle::parse(text).radians();
  if (v < 0.0 || v > qpd::kPi / 2) {
    throw std::invalid_argument(std::string(name) + " = " + text + " outside [0, pi/2]");
  }
  return v;
}

qpd::StrategyParams parse_strategy(const std::string& text) {
  const auto a = qpd::parse_angle_triple(text);
  return qpd::StrategyParams(a[0].radians(), a[1].radians(), a[2].radians());
}

qpd::GridSpec parse_grid(const std::string& text) {
  std::vector<std::size_t> counts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    const std::string part = text.substr(start, pos == std::string::npos ? pos : pos - start);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw std::invalid_argument("grid: bad count '" + part + "'");
    }
    counts.push_back(v);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (counts.size() != 3) throw std::invalid_argument("grid: expected theta,alpha,beta counts");
  qpd::GridSpec g{counts[0], counts[1], counts[2]};
  g.validate();
  return g;
}

double parse_number(std::string_view text) {
  const auto slash = text.find('/');
  auto parse = [](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::invalid_argument("bad number '" + std::string(s) + "'");
    }
    return v;
  };
  if (slash == std::string_view::npos) return parse(text);
  return parse(text.substr(0, slash)) / parse(text.substr(slash + 1));
}

std::vector<double> parse_numbers(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(',', start);
    out.push_back(parse_number(
        std::string_view(text).substr(start, pos == std::string::npos ? pos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

qpd::OpponentPhases parse_phases(const std::string& text) {
  if (text == "restricted") return qpd::OpponentPhases::kRestricted;
  if (text == "mirror-alice") return qpd::OpponentPhases::kMirrorAlice;
  throw std::invalid_argument("phases must be 'restricted' or 'mirror-alice'");
}

qpd::PayoffTable payoffs_of(const Options& o) {
  return o.payoffs_file.empty() ? qpd::PayoffTable{} : qpd::load_payoff_table(o.payoffs_file);
}

void require_format(const Options& o, bool csv_supported) {
  if (o.format != "json" && o.format != "csv") {
    throw std::invalid_argument("format must be 'json' or 'csv'");
  }
  if (o.format == "csv" && !csv_supported) {
    throw std::invalid_argument("this command only supports --format json");
  }
}

void emit(const Options& o, const std::string& content) {
  if (o.out.empty()) {
    std::cout << content;
  } else {
    qpd::write_atomic(o.out, content);
  }
}

Json config_json(double gamma, double delta, const Options& o) {
  return Json{{"gamma", gamma},
              {"gamma_text", o.gamma},
              {"delta", delta},
              {"delta_text", o.delta},
              {"payoff_table", o.payoffs_file.empty() ? "default" : o.payoffs_file}};
}

Json report(Json inputs, Json results) {
  return Json{{"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"fixtures_compared", Json::array()},
              {"verdicts", Json::array()},
              {"discrepancies", Json::array()}};
}

int cmd_payoff(const Options& o) {
  require_format(o, true);
  const double gamma = parse_entanglement(o.gamma, "gamma");
  const double delta = parse_entanglement(o.delta, "delta");
  const qpd::Profile profile{parse_strategy(o.alice), parse_strategy(o.bob),
                             parse_strategy(o.charlie)};
  const qpd::GameConfig config(gamma, delta, payoffs_of(o));

  const auto payoffs = qpd::expected_payoffs(config, profile);
  const auto dist = qpd::outcome_distribution(config, profile);
  if (o.format == "csv") {
    emit(o, "alice,bob,charlie\n" + qpd::format_double(payoffs.alice) + "," +
                qpd::format_double(payoffs.bob) + "," + qpd::format_double(payoffs.charlie) +
                "\n");
    return 0;
  }
  Json probs = Json::object();
  for (std::size_t b = 0; b < qpd::kOutcomes; ++b) probs[qpd::outcome_label(b)] = dist.probs[b];
  Json inputs = config_json(gamma, delta, o);
  inputs["profile"] = qpd::to_json(profile);
  emit(o, qpd::dump(report(inputs, Json{{"payoffs", qpd::to_json(payoffs)},
                                        {"outcome_probabilities", probs}})));
  return 0;
}

std::optional<qpd::FixtureId> default_fixture(double gamma, double delta) {
  const bool g0 = gamma == 0.0, gm = gamma == qpd::kPi / 2;
  const bool d0 = delta == 0.0, dm = delta == qpd::kPi / 2;
  if ((g0 && d0) || (gm && dm)) return qpd::FixtureId::kTable2;
  if ((g0 && dm) || (gm && d0)) return qpd::FixtureId::kTable3;
  return std::nullopt;
}

int cmd_table(const Options& o) {
  require_format(o, true);
  const double gamma = parse_entanglement(o.gamma, "gamma");
  const double delta = parse_entanglement(o.delta, "delta");
  const qpd::PayoffTable payoffs = payoffs_of(o);

  if (o.fixture == "table1") {
    if (o.format == "csv") {
      emit(o, qpd::payoff_table_csv(payoffs));
    } else {
      emit(o, qpd::dump(report(Json{{"fixture", "table1"}},
                               Json{{"payoff_table", qpd::to_json(payoffs)}})));
    }
    return 0;
  }

  const std::optional<qpd::FixtureId> fixture_id =
      o.fixture.empty() ? default_fixture(gamma, delta)
                        : std::optional<qpd::FixtureId>(qpd::parse_fixture(o.fixture));
  const auto table = qpd::protocol_table(gamma, delta, payoffs);
  std::optional<qpd::ProtocolTable> fixture;
  if (fixture_id) fixture = qpd::printed_fixture(*fixture_id);

  if (o.format == "csv") {
    emit(o, qpd::protocol_table_csv(table, fixture));
    return 0;
  }
  Json doc = report(config_json(gamma, delta, o), Json{{"table", qpd::to_json(table)}});
  if (fixture) {
    const auto cmp = qpd::compare_tables(*fixture, table);
    doc["fixtures_compared"].push_back(qpd::to_json(cmp));
    for (std::size_t row = 0; row < 4; ++row) {
      for (std::size_t col = 0; col < qpd::kColumns; ++col) {
        if (table.entries[row][col].max_abs_diff(fixture->entries[row][col]) > qpd::kPayoffTol) {
          doc["discrepancies"].push_back(
              Json{{"codeword", qpd::codewords()[row].bits},
                   {"column", qpd::column_label(col)},
                   {"printed", qpd::to_json(fixture->entries[row][col])},
                   {"oracle", qpd::to_json(table.entries[row][col])}});
        }
      }
    }
  }
  emit(o, qpd::dump(doc));
  return 0;
}

int cmd_nash(const Options& o) {
  require_format(o, !o.four_case);
  const qpd::GridSpec grid = parse_grid(o.grid);
  const qpd::PayoffTable payoffs = payoffs_of(o);

  if (o.four_case) {
    const auto phases = parse_phases(o.phases);
    const auto scan = qpd::four_case_scan(payoffs, grid, phases, o.tol);
    Json doc = report(Json{{"grid", qpd::to_json(grid)}, {"opponent_phases", o.phases}},
                      qpd::to_json(scan));
    for (const auto& v : scan.verdicts) doc["verdicts"].push_back(qpd::to_json(v));
    emit(o, qpd::dump(doc));
    return 0;
  }

  const double gamma = parse_entanglement(o.gamma, "gamma");
  const double delta = parse_entanglement(o.delta, "delta");
  const qpd::Profile profile{parse_strategy(o.alice), parse_strategy(o.bob),
                             parse_strategy(o.charlie)};
  const auto r = qpd::verify_nash(profile, qpd::GameConfig(gamma, delta, payoffs), grid, o.tol);
  if (o.format == "csv") {
    std::string csv = "player,payoff,best_response_gap,theta,alpha,beta\n";
    for (qpd::Player k : qpd::kPlayers) {
      const auto i = static_cast<std::size_t>(k);
      const auto& dev = r.best_deviation[i];
      csv += std::string(qpd::player_name(k)) + "," + qpd::format_double(r.payoffs[k]) + "," +
             qpd::format_double(r.gaps[i]) + "," + qpd::format_double(dev.theta()) + "," +
             qpd::format_double(dev.alpha()) + "," + qpd::format_double(dev.beta()) + "\n";
    }
    emit(o, csv);
    return 0;
  }
  Json inputs = config_json(gamma, delta, o);
  inputs["grid"] = qpd::to_json(grid);
  emit(o, qpd::dump(report(inputs, qpd::to_json(r))));
  return 0;
}

qpd::ObservationModel model_of(const Options& o, std::size_t observed_count) {
  qpd::ObservationModel model;
  model.rounding = o.rounding;
  if (!o.visibility.empty()) {
    model.visibility = qpd::parse_visibility(o.visibility);
  } else if (observed_count == 1) {
    model.visibility = qpd::Visibility::kOwn;
  } else if (observed_count == 3) {
    model.visibility = qpd::Visibility::kTriple;
  }
  model.validate();
  return model;
}

std::size_t parse_column(const std::string& text) {
  const auto pair = qpd::parse_angle_pair(text);
  return qpd::column_index(pair[0].radians(), pair[1].radians());
}

int cmd_comm_decode(const Options& o) {
  require_format(o, false);
  if (o.observed.empty()) throw std::invalid_argument("decode needs --observed");
  const std::vector<double> observed = parse_numbers(o.observed);
  const qpd::ObservationModel model = model_of(o, observed.size());
  const std::size_t column = parse_column(o.common);

  qpd::ProtocolTable table;
  Json inputs = Json::object();
  if (!o.fixture.empty()) {
    table = qpd::printed_fixture(qpd::parse_fixture(o.fixture));
    inputs["fixture"] = o.fixture;
  } else {
    const double gamma = parse_entanglement(o.gamma, "gamma");
    const double delta = parse_entanglement(o.delta, "delta");
    table = qpd::protocol_table(gamma, delta, payoffs_of(o));
    inputs = config_json(gamma, delta, o);
  }
  inputs["column"] = qpd::column_label(column);
  inputs["observed"] = observed;
  inputs["visibility"] = qpd::visibility_name(model.visibility);
  inputs["rounding"] = model.rounding;

  const auto result = qpd::decode(table, column, observed, model);
  Json res = qpd::to_json(result);
  Json alice = Json::array();
  for (std::size_t i : result.candidates) alice.push_back(table.entries[i][column].alice);
  res["alice_payoffs"] = alice;
  emit(o, qpd::dump(report(inputs, res)));
  return 0;
}

int cmd_comm_simulate(const Options& o) {
  require_format(o, false);
  const double gamma = parse_entanglement(o.gamma, "gamma");
  const double delta = parse_entanglement(o.delta, "delta");
  const qpd::GameConfig config(gamma, delta, payoffs_of(o));
  const std::size_t column = parse_column(o.common);
  const qpd::ObservationModel model = model_of(o, 2);
  std::vector<std::size_t> sent;
  if (o.codeword.empty()) {
    sent = {0, 1, 2, 3};
  } else {
    sent = {qpd::codeword_index(o.codeword)};
  }

  Json runs = Json::array();
  for (std::size_t c : sent) {
    const auto sim = qpd::simulate(config, c, column, model);
    runs.push_back(Json{{"sent", qpd::codewords()[c].bits},
                        {"alice_operation", qpd::codewords()[c].label},
                        {"payoffs", qpd::to_json(sim.payoffs)},
                        {"observed", sim.observed},
                        {"decoded", qpd::to_json(sim.decoded)}});
  }
  const auto table = qpd::protocol_table(gamma, delta, config.payoffs());
  const auto per_column = qpd::column_information(table, model);
  Json inputs = config_json(gamma, delta, o);
  inputs["column"] = qpd::column_label(column);
  inputs["visibility"] = qpd::visibility_name(model.visibility);
  inputs["rounding"] = model.rounding;
  emit(o, qpd::dump(report(inputs, Json{{"runs", runs},
                                        {"column_information_bits", per_column},
                                        {"information_bits", qpd::information_bits(table, model)}})));
  return 0;
}

int cmd_verify(const Options& o) {
  require_format(o, false);
  qpd::VerifyOptions v;
  v.seed = o.seed ? *o.seed : default_seed();
  v.grid = parse_grid(o.grid);
  v.payoffs = payoffs_of(o);
  v.phases = parse_phases(o.phases);
  const auto bundle = qpd::run_verification(v);
  emit(o, qpd::dump(bundle.document));

  std::size_t hard_failed = 0, soft_failed = 0;
  for (const auto& verdict : bundle.verdicts) {
    if (!verdict.passed) ++(verdict.hard ? hard_failed : soft_failed);
    if (verdict.hard) {
      std::cerr << (verdict.passed ? "PASS  " : "FAIL  ") << verdict.name << "  ("
                << verdict.detail << ")\n";
    }
  }
  std::cerr << bundle.verdicts.size() << " verdicts, " << hard_failed << " hard failure(s), "
            << soft_failed << " unconfirmed report-only claim(s)\n";
  return bundle.hard_passed ? 0 : kExitFailedCheck;
}

void add_config_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--gamma", o.gamma, "initial-state entanglement in [0, pi/2]");
  cmd->add_option("--delta", o.delta, "measurement-basis entanglement in [0, pi/2]");
  cmd->add_option("--payoffs", o.payoffs_file, "payoff table JSON (keys \"000\"..\"111\")");
}

void add_profile_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--alice", o.alice, "theta,alpha,beta");
  cmd->add_option("--bob", o.bob, "theta,alpha,beta");
  cmd->add_option("--charlie", o.charlie, "theta,alpha,beta");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "json (records) or csv (delimited table)");
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-player quantum Prisoner's Dilemma engine"};
  app.require_subcommand(1);
  Options o;

  auto* payoff = app.add_subcommand("payoff", "expected payoffs of one strategy profile");
  add_config_flags(payoff, o);
  add_profile_flags(payoff, o);
  add_output_flags(payoff, o);

  auto* table = app.add_subcommand("table", "4x4 codeword table against the printed fixture");
  add_config_flags(table, o);
  add_output_flags(table, o);
  table->add_option("--fixture", o.fixture, "table1, table2 or table3");

  auto* nash = app.add_subcommand("nash", "grid Nash certificate or the four-case scan");
  add_config_flags(nash, o);
  add_profile_flags(nash, o);
  add_output_flags(nash, o);
  nash->add_option("--grid", o.grid, "theta,alpha,beta point counts");
  nash->add_option("--tol", o.tol, "largest unilateral gain still counted as Nash");
  nash->add_flag("--four-case", o.four_case, "scan the PP/PE/EP/EE configurations");
  nash->add_option("--phases", o.phases, "restricted or mirror-alice (Bob/Charlie phases)");

  auto* comm = app.add_subcommand("comm", "two-bit signalling through payoffs");
  comm->require_subcommand(1);
  auto* simulate = comm->add_subcommand("simulate", "send codewords and decode them");
  auto* decode = comm->add_subcommand("decode", "decode observed payoffs");
  for (auto* cmd : {simulate, decode}) {
    add_config_flags(cmd, o);
    add_output_flags(cmd, o);
    cmd->add_option("--common", o.common, "theta_bob,theta_charlie, each 0 or pi");
    cmd->add_option("--visibility", o.visibility, "own, pair or triple");
    cmd->add_option("--rounding", o.rounding, "decimal places used when matching payoffs");
  }
  simulate->add_option("--codeword", o.codeword, "00, 01, 10 or 11 (default: all)");
  decode->add_option("--observed", o.observed, "observed payoffs, comma separated");
  decode->add_option("--fixture", o.fixture, "decode against table2 or table3");

  auto* verify = app.add_subcommand("verify", "run every check and write the report bundle");
  add_config_flags(verify, o);
  add_output_flags(verify, o);
  verify->add_option("--grid", o.grid, "theta,alpha,beta point counts");
  verify->add_option("--phases", o.phases, "restricted or mirror-alice");
  std::uint64_t seed = 0;
  auto* seed_opt = verify->add_option("--seed", seed, "master seed (default: $QPD_SEED or built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (seed_opt->count() > 0) o.seed = seed;

  try {
    if (payoff->parsed()) return cmd_payoff(o);
    if (table->parsed()) return cmd_table(o);
    if (nash->parsed()) return cmd_nash(o);
    if (simulate->parsed()) return cmd_comm_simulate(o);
    if (decode->parsed()) return cmd_comm_decode(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const qpd::DecodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
