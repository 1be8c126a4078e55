#include "qpd/verify.hpp"

#include <algorithm>
#include <cmath>

#include "qpd/angle.hpp"
#include "qpd/closed_form.hpp"
#include "qpd/comms.hpp"
#include "qpd/sampling.hpp"

namespace qpd {
namespace {

enum Stream : std::uint64_t {
  kClassicalPhases = 1,
  kBornRule = 2,
  kClosedForm = 3,
  kClosedFormClassical = 4,
  kClosedFormPure = 5,
  kMaximal = 6,
};

Verdict hard(std::string name, bool ok, double measured, std::string detail) {
  return Verdict{std::move(name), ok, true, measured, std::move(detail)};
}

Verdict soft(std::string name, bool ok, double measured, std::string detail) {
  return Verdict{std::move(name), ok, false, measured, std::move(detail)};
}

// Pure profiles at gamma = delta = 0 with random phases, against the table rows.
Json classical_limit(const PayoffTable& table, std::uint64_t seed, std::vector<Verdict>& out) {
  SeededSampler rng(seed);
  const GameConfig config(0.0, 0.0, table);
  double worst = 0.0;
  for (std::size_t b = 0; b < kOutcomes; ++b) {
    for (int rep = 0; rep < 10; ++rep) {
      Profile p;
      for (Player k : kPlayers) {
        const bool defect = (b >> (2 - static_cast<std::size_t>(k))) & 1;
        p[k] = StrategyParams(defect ? kPi : 0.0, rng.phase(), rng.phase());
      }
      worst = std::max(worst, expected_payoffs(config, p).max_abs_diff(table[b]));
    }
  }
  out.push_back(hard("classical limit reproduces the payoff table", worst <= kAlgebraTol, worst,
                     "80 pure profiles, max deviation " + format_double(worst)));
  return Json{{"profiles", 80}, {"max_abs_diff", worst}};
}

Json basis_completeness(std::vector<Verdict>& out) {
  double gram_worst = 0.0;
  double sum_worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double delta = (kPi / 2) * i / 49.0;
    const auto basis = measurement_basis(delta);
    SquareOperator sum = SquareOperator::zero(8);
    for (std::size_t a = 0; a < kOutcomes; ++a) {
      sum = add(sum, outer(basis[a]));
      for (std::size_t b = 0; b < kOutcomes; ++b) {
        const Complex g = inner(basis[a], basis[b]);
        gram_worst = std::max(gram_worst, std::abs(g - Complex(a == b ? 1.0 : 0.0)));
      }
    }
    sum_worst = std::max(sum_worst, max_abs_diff(sum, SquareOperator::identity(8)));
  }
  const double worst = std::max(gram_worst, sum_worst);
  out.push_back(hard("measurement basis orthonormal and complete", worst <= kAlgebraTol, worst,
                     "50 delta points, Gram deviation " + format_double(gram_worst) +
                         ", projector-sum deviation " + format_double(sum_worst)));
  return Json{{"delta_points", 50}, {"gram_max_abs_diff", gram_worst}, {"projector_sum_max_abs_diff", sum_worst}};
}

Json born_rule(const PayoffTable& table, std::uint64_t seed, std::vector<Verdict>& out) {
  SeededSampler rng(seed);
  double worst_sum = 0.0;
  double min_prob = 1.0;
  for (int i = 0; i < 1000; ++i) {
    const double g = rng.entanglement();
    const double d = rng.entanglement();
    const auto dist = outcome_distribution(GameConfig(g, d, table), rng.profile());
    worst_sum = std::max(worst_sum, std::abs(dist.sum() - 1.0));
    min_prob = std::min(min_prob, *std::min_element(dist.probs.begin(), dist.probs.end()));
  }
  out.push_back(hard("Born-rule probabilities sum to 1", worst_sum <= kAlgebraTol, worst_sum,
                     "1000 draws, max |sum - 1| = " + format_double(worst_sum)));
  return Json{{"draws", 1000}, {"max_abs_sum_error", worst_sum}, {"min_probability", min_prob}};
}

Json nash_profiles(const VerifyOptions& o, std::vector<Verdict>& out) {
  const Profile defect{StrategyParams(kPi, kPi, kPi), restricted_strategy(kPi),
                       restricted_strategy(kPi)};
  const auto pp = verify_nash(defect, GameConfig(0.0, 0.0, o.payoffs), o.grid, kPayoffTol);
  const double pp_dev = pp.payoffs.max_abs_diff({1, 1, 1});
  out.push_back(hard("all-defect profile is grid-Nash with payoff (1,1,1) at gamma=delta=0",
                     pp.is_nash && pp_dev <= kPayoffTol,
                     std::max({pp.gaps[0], pp.gaps[1], pp.gaps[2], pp_dev}),
                     "payoff deviation " + format_double(pp_dev)));

  const Profile cooperate{StrategyParams(0.0, kPi, kPi), StrategyParams(), StrategyParams()};
  const PayoffTriple ee = expected_payoffs(GameConfig(kPi / 2, kPi / 2, o.payoffs), cooperate);
  const double ee_dev = ee.max_abs_diff({3, 3, 3});
  out.push_back(hard("theta=0, alpha_A=beta_A=pi gives (3,3,3) at gamma=delta=pi/2",
                     ee_dev <= kPayoffTol, ee_dev, "deviation " + format_double(ee_dev)));

  const auto cc = verify_nash(Profile{}, GameConfig(0.0, 0.0, o.payoffs), o.grid, kPayoffTol);
  out.push_back(soft("all-cooperate profile is not grid-Nash at gamma=delta=0", !cc.is_nash,
                     std::max({cc.gaps[0], cc.gaps[1], cc.gaps[2]}),
                     "largest unilateral gain " +
                         format_double(std::max({cc.gaps[0], cc.gaps[1], cc.gaps[2]}))));
  return Json{{"all_defect", to_json(pp)},
              {"entangled_cooperation_payoffs", to_json(ee)},
              {"all_cooperate", to_json(cc)}};
}

Json closed_form_section(const VerifyOptions& o, std::vector<Verdict>& out) {
  const auto general = compare_to_oracle(SampleRegion::kUnrestricted, 1000,
                                         derive_seed(o.seed, kClosedForm), o.payoffs);
  const auto classical = compare_to_oracle(SampleRegion::kClassical, 1000,
                                           derive_seed(o.seed, kClosedFormClassical), o.payoffs);
  const auto pure = compare_to_oracle(SampleRegion::kPureTheta, 1000,
                                      derive_seed(o.seed, kClosedFormPure), o.payoffs);
  const auto max_vs_general =
      compare_to_oracle(SampleRegion::kMaximal, 100, derive_seed(o.seed, kMaximal), o.payoffs,
                        ClosedFormRoute::kMaximalVsGeneral);
  const auto max_vs_oracle =
      compare_to_oracle(SampleRegion::kMaximal, 100, derive_seed(o.seed, kMaximal), o.payoffs,
                        ClosedFormRoute::kMaximalVsOracle);

  out.push_back(hard("closed form matches trace rule at gamma=delta=0",
                     classical.max_abs_diff < kPayoffTol, classical.max_abs_diff,
                     "1000 samples, max |diff| " + format_double(classical.max_abs_diff)));
  out.push_back(soft("closed form matches trace rule (unrestricted)",
                     general.max_abs_diff < kPayoffTol, general.max_abs_diff,
                     "1000 samples, mean |diff| " + format_double(general.mean_abs_diff)));
  out.push_back(soft("closed form matches trace rule (theta in {0, pi})",
                     pure.max_abs_diff < kPayoffTol, pure.max_abs_diff,
                     "1000 samples, mean |diff| " + format_double(pure.mean_abs_diff)));
  out.push_back(soft("maximal-entanglement form matches general closed form",
                     max_vs_general.max_abs_diff < kPayoffTol, max_vs_general.max_abs_diff,
                     "100 samples, mean |diff| " + format_double(max_vs_general.mean_abs_diff)));
  out.push_back(soft("maximal-entanglement form matches trace rule",
                     max_vs_oracle.max_abs_diff < kPayoffTol, max_vs_oracle.max_abs_diff,
                     "100 samples, mean |diff| " + format_double(max_vs_oracle.mean_abs_diff)));

  return Json{{"unrestricted", to_json(general, true)},
              {"classical", to_json(classical, false)},
              {"pure_theta", to_json(pure, false)},
              {"maximal_vs_closed_form", to_json(max_vs_general, false)},
              {"maximal_vs_trace_rule", to_json(max_vs_oracle, false)}};
}

Json comms_section(const VerifyOptions& o, std::vector<Verdict>& out, Json& fixtures,
                   Json& discrepancies) {
  const ProtocolTable t2 = printed_fixture(FixtureId::kTable2);
  const ObservationModel pair{Visibility::kPair, 9};

  Json decodes = Json::array();
  auto check_decode = [&](std::size_t column, std::array<double, 2> observed,
                          std::size_t expected, double alice) {
    const auto r = decode(t2, column, observed, pair);
    const bool ok = r.candidates.size() == 1 && r.candidates[0] == expected &&
                    t2.entries[expected][column].alice == alice;
    out.push_back(hard("decode (" + format_double(observed[0]) + "," + format_double(observed[1]) +
                           ") at " + column_label(column) + " -> " + codewords()[expected].label,
                       ok, static_cast<double>(r.candidates.size()),
                       std::to_string(r.candidates.size()) + " candidate(s)"));
    decodes.push_back(Json{{"fixture", "table2"},
                           {"column", column_label(column)},
                           {"observed", observed},
                           {"result", to_json(r)},
                           {"alice_payoff", t2.entries[r.candidates[0]][column].alice}});
  };
  check_decode(column_index(0.0, 0.0), {2, 2}, 3, 5);
  check_decode(column_index(kPi, kPi), {4, 4}, 0, 0);

  // Oracle tables at the four configurations against the printed tables.
  const auto oracle = oracle_case_tables(o.payoffs);
  const auto printed = fixture_case_tables();
  const std::array<const char*, 4> names = {"PP", "PE", "EP", "EE"};
  fixtures = Json::array();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto cmp = compare_tables(printed[i], oracle[i]);
    Json entry = to_json(cmp);
    entry["case"] = names[i];
    fixtures.push_back(entry);
    for (std::size_t row = 0; row < 4; ++row) {
      for (std::size_t col = 0; col < kColumns; ++col) {
        const PayoffTriple& d = cmp.diff[row][col];
        if (std::max({std::abs(d.alice), std::abs(d.bob), std::abs(d.charlie)}) > kPayoffTol) {
          discrepancies.push_back(
              Json{{"kind", "fixture-entry"},
                   {"fixture", cmp.fixture},
                   {"case", names[i]},
                   {"gamma", cmp.gamma},
                   {"delta", cmp.delta},
                   {"codeword", codewords()[row].bits},
                   {"column", column_label(col)},
                   {"printed", to_json(printed[i].entries[row][col])},
                   {"oracle", to_json(oracle[i].entries[row][col])}});
        }
      }
    }
    out.push_back(soft(std::string("printed table matches trace rule for ") + names[i],
                       cmp.mismatched_entries == 0, cmp.max_abs_diff,
                       std::to_string(cmp.mismatched_entries) + " of 16 entries differ"));
  }

  Json info = Json::array();
  const auto fixture_tables = fixture_case_tables();
  for (Visibility v : {Visibility::kOwn, Visibility::kPair, Visibility::kTriple}) {
    const ObservationModel model{v, 9};
    for (const auto& rel : {info_relation_report("printed-fixture", fixture_tables, model),
                            info_relation_report("oracle", oracle, model)}) {
      info.push_back(to_json(rel));
      out.insert(out.end(), rel.verdicts.begin(), rel.verdicts.end());
    }
  }
  const double t2_bits = information_bits(t2, ObservationModel{Visibility::kTriple, 9});
  out.push_back(hard("printed Table 2 carries 2 bits under full-triple visibility",
                     t2_bits == 2.0, t2_bits, "I = " + format_double(t2_bits)));

  return Json{{"decode_examples", decodes}, {"information", info}};
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  // splitmix64 of (master + stream * golden-ratio increment)
  std::uint64_t z = master + stream * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

VerificationBundle run_verification(const VerifyOptions& o) {
  o.grid.validate();
  VerificationBundle bundle;
  auto& verdicts = bundle.verdicts;

  Json results = Json::object();
  Json fixtures = Json::array();
  Json discrepancies = Json::array();

  results["classical_limit"] = classical_limit(o.payoffs, derive_seed(o.seed, kClassicalPhases), verdicts);
  results["measurement_basis"] = basis_completeness(verdicts);
  results["born_rule"] = born_rule(o.payoffs, derive_seed(o.seed, kBornRule), verdicts);
  results["nash"] = nash_profiles(o, verdicts);

  const FourCaseScan scan = four_case_scan(o.payoffs, o.grid, o.phases);
  results["four_case_scan"] = to_json(scan);
  verdicts.insert(verdicts.end(), scan.verdicts.begin(), scan.verdicts.end());

  results["closed_form"] = closed_form_section(o, verdicts);
  results["communication"] = comms_section(o, verdicts, fixtures, discrepancies);

  for (const auto& v : verdicts) {
    if (!v.passed) {
      discrepancies.push_back(Json{{"kind", v.hard ? "failed-claim" : "unconfirmed-claim"},
                                   {"verdict", v.name},
                                   {"measured", v.measured},
                                   {"detail", v.detail}});
    }
  }

  Json verdict_list = Json::array();
  for (const auto& v : verdicts) verdict_list.push_back(to_json(v));
  bundle.hard_passed = all_hard_passed(verdicts);

  bundle.document = Json{
      {"inputs", Json{{"seed", o.seed},
                      {"grid", to_json(o.grid)},
                      {"opponent_phases", opponent_phases_name(o.phases)},
                      {"payoff_table", to_json(o.payoffs)},
                      {"algebra_tol", kAlgebraTol},
                      {"payoff_tol", kPayoffTol}}},
      {"results", results},
      {"fixtures_compared", fixtures},
      {"verdicts", verdict_list},
      {"discrepancies", discrepancies},
      {"hard_checks_passed", bundle.hard_passed},
  };
  return bundle;
}

}  // namespace qpd
