#include "qpd/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qpd/angle.hpp"

namespace qpd {
namespace {

constexpr double kTieTol = 1e-12;

std::vector<double> spaced(std::size_t n, std::int64_t lo_num, std::int64_t span_num) {
  // lo + span * i / (n - 1), in units of pi, kept rational so endpoints are exact.
  std::vector<double> out;
  out.reserve(n);
  const auto steps = static_cast<std::int64_t>(n - 1);
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    out.push_back(Angle::pi_fraction(lo_num * steps + span_num * i, steps).radians());
  }
  return out;
}

double payoff_of(Player player, const Profile& profile, const GameConfig& config) {
  return expected_payoffs(config, profile)[player];
}

std::string theta_text(double theta) {
  if (theta == 0.0) return "0";
  if (theta == kPi) return "pi";
  if (theta == kPi / 2) return "pi/2";
  return format_double(theta);
}

Verdict bound_below(const std::string& name, const PayoffTriple& v, double bound, double tol) {
  const double worst = std::max({v.alice, v.bob, v.charlie});
  Verdict out{name, worst < bound - tol, true, worst, ""};
  out.detail = "max payoff " + format_double(worst) + " vs bound " + format_double(bound);
  return out;
}

Verdict equals(const std::string& name, const PayoffTriple& v, double target, double tol) {
  const double dev = v.max_abs_diff(PayoffTriple{target, target, target});
  Verdict out{name, dev <= tol, true, dev, ""};
  out.detail = "max |payoff - " + format_double(target) + "| = " + format_double(dev);
  return out;
}

Verdict less_than(const std::string& name, const PayoffTriple& lo, const PayoffTriple& hi,
                  double tol, bool hard) {
  double margin = hi.alice - lo.alice;
  for (Player k : kPlayers) margin = std::min(margin, hi[k] - lo[k]);
  Verdict out{name, margin > tol, hard, margin, ""};
  out.detail = "smallest per-player margin " + format_double(margin);
  return out;
}

Verdict same(const std::string& name, const PayoffTriple& a, const PayoffTriple& b, double tol) {
  const double gap = a.max_abs_diff(b);
  Verdict out{name, gap < tol, false, gap, ""};
  out.detail = "max per-player gap " + format_double(gap);
  return out;
}

}  // namespace

void GridSpec::validate() const {
  if (theta_points < 3 || (theta_points - 1) % 2 != 0) {
    throw std::invalid_argument("grid: theta_points must be odd and >= 3 (got " +
                                std::to_string(theta_points) + ")");
  }
  for (std::size_t n : {alpha_points, beta_points}) {
    if (n < 5 || (n - 1) % 4 != 0) {
      throw std::invalid_argument("grid: phase point counts must be 4j+1 with j >= 1 (got " +
                                  std::to_string(n) + ")");
    }
  }
}

std::vector<double> GridSpec::theta_values() const {
  validate();
  return spaced(theta_points, 0, 1);
}

std::vector<double> GridSpec::alpha_values() const {
  validate();
  return spaced(alpha_points, -1, 2);
}

std::vector<double> GridSpec::beta_values() const {
  validate();
  return spaced(beta_points, -1, 2);
}

std::vector<StrategyParams> grid_strategies(const GridSpec& grid) {
  const auto thetas = grid.theta_values();
  const auto alphas = grid.alpha_values();
  const auto betas = grid.beta_values();
  std::vector<StrategyParams> out;
  out.reserve(grid.size());
  for (double t : thetas)
    for (double a : alphas)
      for (double b : betas) out.emplace_back(t, a, b);
  return out;
}

PayoffCase classify(const GameConfig& config) {
  const bool entangled_state = config.gamma() != 0.0;
  const bool entangled_basis = config.delta() != 0.0;
  if (!entangled_state) return entangled_basis ? PayoffCase::kPE : PayoffCase::kPP;
  return entangled_basis ? PayoffCase::kEE : PayoffCase::kEP;
}

std::string case_label(PayoffCase c) {
  switch (c) {
    case PayoffCase::kPP: return "PP";
    case PayoffCase::kPE: return "PE";
    case PayoffCase::kEP: return "EP";
    case PayoffCase::kEE: return "EE";
  }
  return "?";
}

StrategyParams best_response(Player player, const Profile& profile, const GameConfig& config,
                             const GridSpec& grid) {
  const auto candidates = grid_strategies(grid);
  Profile trial = profile;
  StrategyParams best = candidates.front();
  double best_value = -std::numeric_limits<double>::infinity();
  for (const auto& s : candidates) {
    trial[player] = s;
    const double v = payoff_of(player, trial, config);
    if (v > best_value + kTieTol) {
      best_value = v;
      best = s;
    }
  }
  return best;
}

EquilibriumReport verify_nash(const Profile& profile, const GameConfig& config,
                              const GridSpec& grid, double tol) {
  EquilibriumReport report;
  report.gamma = config.gamma();
  report.delta = config.delta();
  report.payoff_case = classify(config);
  report.profile = profile;
  report.payoffs = expected_payoffs(config, profile);
  report.tol = tol;

  const auto candidates = grid_strategies(grid);
  for (Player k : kPlayers) {
    const auto idx = static_cast<std::size_t>(k);
    Profile trial = profile;
    double best_value = report.payoffs[k];
    StrategyParams best = profile[k];
    for (const auto& s : candidates) {
      trial[k] = s;
      const double v = payoff_of(k, trial, config);
      if (v > best_value + kTieTol) {
        best_value = v;
        best = s;
      }
    }
    report.gaps[idx] = std::max(0.0, best_value - report.payoffs[k]);
    report.best_deviation[idx] = best;
  }
  report.is_nash = std::all_of(report.gaps.begin(), report.gaps.end(),
                               [tol](double g) { return g <= tol; });
  return report;
}

std::string opponent_phases_name(OpponentPhases phases) {
  return phases == OpponentPhases::kRestricted ? "restricted" : "mirror-alice";
}

Profile case_profile(double theta, OpponentPhases phases) {
  const StrategyParams alice(theta, kPi, kPi);
  const StrategyParams other = phases == OpponentPhases::kRestricted
                                   ? StrategyParams(theta, 0.0, kPi / 2)
                                   : StrategyParams(theta, kPi, kPi);
  return Profile{alice, other, other};
}

FourCaseScan four_case_scan(const PayoffTable& table, const GridSpec& grid,
                            OpponentPhases phases, double tol) {
  grid.validate();
  FourCaseScan scan;
  scan.phases = phases;
  scan.tol = tol;

  struct Spec {
    PayoffCase which;
    double gamma;
    double delta;
    std::vector<double> thetas;
  };
  const std::array<Spec, 4> specs = {{
      {PayoffCase::kPP, 0.0, 0.0, {kPi}},
      {PayoffCase::kPE, 0.0, kPi / 2, {kPi / 2, 0.0}},
      {PayoffCase::kEP, kPi / 2, 0.0, {kPi / 2, 0.0}},
      {PayoffCase::kEE, kPi / 2, kPi / 2, {0.0}},
  }};

  for (std::size_t i = 0; i < specs.size(); ++i) {
    const Spec& spec = specs[i];
    const GameConfig config(spec.gamma, spec.delta, table);
    scan.cases[i].payoff_case = spec.which;
    for (double theta : spec.thetas) {
      scan.cases[i].entries.push_back(
          {theta_text(theta), verify_nash(case_profile(theta, phases), config, grid, tol)});
    }
  }

  const PayoffTriple& pp = scan.cases[0].entries[0].report.payoffs;
  const PayoffTriple& ee = scan.cases[3].entries[0].report.payoffs;
  auto& out = scan.verdicts;
  out.push_back(equals("PP payoff = 1", pp, 1.0, tol));
  out.push_back(equals("EE payoff = 3", ee, 3.0, tol));
  out.push_back(less_than("PP < EE", pp, ee, tol, true));
  for (std::size_t c : {1u, 2u}) {
    for (const auto& entry : scan.cases[c].entries) {
      out.push_back(bound_below(case_label(scan.cases[c].payoff_case) + "(theta=" +
                                    entry.theta_label + ") < 3",
                                entry.report.payoffs, 3.0, tol));
    }
  }
  for (std::size_t j = 0; j < scan.cases[1].entries.size(); ++j) {
    const auto& pe = scan.cases[1].entries[j];
    const auto& ep = scan.cases[2].entries[j];
    const std::string suffix = "(theta=" + pe.theta_label + ")";
    out.push_back(less_than("PP < PE" + suffix, pp, pe.report.payoffs, tol, false));
    out.push_back(same("PE = EP" + suffix, pe.report.payoffs, ep.report.payoffs, tol));
    out.push_back(less_than("EP < EE" + suffix, ep.report.payoffs, ee, tol, false));
  }
  for (const auto& c : scan.cases) {
    for (const auto& entry : c.entries) {
      const auto& r = entry.report;
      const double worst = std::max({r.gaps[0], r.gaps[1], r.gaps[2]});
      out.push_back(Verdict{case_label(c.payoff_case) + "(theta=" + entry.theta_label +
                                ") is grid-Nash",
                            r.is_nash, c.payoff_case == PayoffCase::kPP, worst,
                            "largest unilateral gain " + format_double(worst)});
    }
  }
  return scan;
}

}  // namespace qpd
