#include "qpd/closed_form.hpp"

#include <cmath>
#include <stdexcept>

#include "qpd/sampling.hpp"

namespace qpd {
namespace {

double sq(double x) { return x * x; }

// cos 2(x), as written in the bracketed phase terms.
double cos2(double x) { return std::cos(2.0 * x); }

double closed_form_for(const GameConfig& config, const Profile& p, Player k) {
  const ClosedFormTerms t = closed_form_terms(config.gamma(), config.delta(), p);
  const auto pay = [&](const char* label) { return config.payoffs().at(label)[k]; };

  const double aA = p.alice.alpha(), aB = p.bob.alpha(), aC = p.charlie.alpha();
  const double bA = p.alice.beta(), bB = p.bob.beta(), bC = p.charlie.beta();
  const double cA = t.c[0], cB = t.c[1], cC = t.c[2];
  const double sA = t.s[0], sB = t.s[1], sC = t.s[2];
  const double eta1 = t.eta1, eta2 = t.eta2, xi = t.xi;

  const double p000 = pay("000"), p111 = pay("111"), p001 = pay("001"), p110 = pay("110");
  const double p100 = pay("100"), p011 = pay("011"), p101 = pay("101"), p010 = pay("010");

  double v = 0.0;
  v += cA * cB * cC * (eta1 * p000 + eta2 * p111 + (p000 - p111) * xi * cos2(aA + aB + aC));
  v += sA * sB * sC * (eta2 * p000 + eta1 * p111 - (p000 - p111) * xi * cos2(bA + bB + bC));
  v += cA * cB * sC * (eta1 * p001 + eta2 * p110 + (p001 - p110) * xi * cos2(aA + aB - bC));
  v += sA * sB * cC * (eta2 * p001 + eta1 * p110 - (p001 - p110) * xi * cos2(bA + bB - aC));
  v += sA * cB * cC * (eta1 * p100 + eta2 * p011 + (p100 - p011) * xi * cos2(aB + aC - bA));
  v += cA * sB * sC * (eta2 * p100 + eta1 * p011 - (p100 - p011) * xi * cos2(bB + bC - aA));
  v += sA * cB * sC * (eta1 * p101 + eta2 * p010 + (p101 - p010) * xi * cos2(bA + bC - aB));
  v += cA * sB * cC * (eta2 * p101 + eta1 * p010 - (p101 - p010) * xi * cos2(aA + aC - bB));

  const double g = config.gamma(), d = config.delta();
  const double sin1 = std::sin(p.alice.theta());
  const double sin2 = std::sin(p.bob.theta());
  const double sin3 = std::sin(p.charlie.theta());

  v += (1.0 / 8.0) * (sq(std::cos(d / 2)) - sq(std::sin(d / 2))) *
       (p000 - p111 - p001 + p110 - p010 + p101 + p011 - p100) * std::sin(g) * sin1 * sin2 *
       sin3 * std::cos(aA + aB + aC - bA - bB - bC);

  // The sin(delta) block repeats sin(theta_2) where sin(theta_3) would be expected.
  const double block =
      (p000 - p111) * std::sin(d) * sin1 * sin2 * sin2 * std::cos(aA + aB + aC - bA - bB - bC) +
      (p110 - p001) * std::sin(d) * sin1 * sin2 * sin2 * std::cos(aA + aB - aC + bA + bB - bC) +
      (p010 - p101) * std::sin(d) * sin1 * sin2 * sin2 * std::cos(aA - aB + aC + bA - bB + bC) +
      (p100 - p011) * std::sin(d) * sin1 * sin2 * sin2 * std::cos(aA - aB - aC + bA - bB - bC);
  v += block * ((1.0 / 8.0) * (sq(std::cos(g / 2)) - sq(std::sin(g / 2))));
  return v;
}

double maximal_for(const GameConfig& config, const Profile& p, Player k) {
  const ClosedFormTerms t = closed_form_terms(config.gamma(), config.delta(), p);
  const auto pay = [&](const char* label) { return config.payoffs().at(label)[k]; };
  const double cA = t.c[0], cB = t.c[1], cC = t.c[2];
  const double sA = t.s[0], sB = t.s[1], sC = t.s[2];
  const double xi = 0.5;
  const double ca = cos2(p.alice.alpha());
  const double cb = cos2(p.alice.beta());

  const double p000 = pay("000"), p111 = pay("111"), p001 = pay("001"), p110 = pay("110");
  const double p100 = pay("100"), p011 = pay("011"), p101 = pay("101"), p010 = pay("010");

  double v = 0.0;
  v += cA * cB * cC / 2 * ((p000 + p111) + (p000 - p111) * xi * ca);
  v += sA * sB * sC / 2 * ((p000 + p111) - (p000 - p111) * xi * cb);
  v += cA * cB * sC / 2 * ((p001 + p110) + (p001 - p110) * xi * ca);
  v += sA * sB * cC / 2 * ((p001 + p110) - (p001 - p110) * xi * cb);
  v += sA * cB * cC / 2 * ((p100 + p011) + (p100 - p011) * xi * cb);
  v += cA * sB * sC / 2 * ((p100 + p011) - (p100 - p011) * xi * ca);
  v += sA * cB * sC / 2 * ((p101 + p010) + (p101 - p010) * xi * cb);
  v += cA * sB * cC / 2 * ((p101 + p010) - (p101 - p010) * xi * ca);
  return v;
}

PayoffTriple sub(const PayoffTriple& a, const PayoffTriple& b) {
  return {a.alice - b.alice, a.bob - b.bob, a.charlie - b.charlie};
}

}  // namespace

ClosedFormTerms closed_form_terms(double gamma, double delta, const Profile& profile) {
  const double cg = sq(std::cos(gamma / 2)), sg = sq(std::sin(gamma / 2));
  const double cd = sq(std::cos(delta / 2)), sd = sq(std::sin(delta / 2));
  ClosedFormTerms t;
  t.eta1 = cg * cd + sg * sd;
  t.eta2 = sg * cd + sd * cg;
  t.xi = 0.5 * std::sin(delta) * std::sin(gamma);
  for (Player k : kPlayers) {
    const double th = profile[k].theta();
    t.c[static_cast<std::size_t>(k)] = sq(std::cos(th / 2));
    t.s[static_cast<std::size_t>(k)] = sq(std::sin(th / 2));
  }
  return t;
}

PayoffTriple closed_form_payoffs(const GameConfig& config, const Profile& profile) {
  PayoffTriple out;
  for (Player k : kPlayers) out[k] = closed_form_for(config, profile, k);
  return out;
}

PayoffTriple maximal_entanglement_payoffs(const GameConfig& config, const Profile& profile) {
  if (config.gamma() != kPi / 2 || config.delta() != kPi / 2) {
    throw std::invalid_argument(
        "maximal_entanglement_payoffs: requires gamma = delta = pi/2");
  }
  PayoffTriple out;
  for (Player k : kPlayers) out[k] = maximal_for(config, profile, k);
  return out;
}

std::string region_name(SampleRegion region) {
  switch (region) {
    case SampleRegion::kUnrestricted: return "unrestricted";
    case SampleRegion::kClassical: return "classical";
    case SampleRegion::kPureTheta: return "pure-theta";
    case SampleRegion::kMaximal: return "maximal";
  }
  return "?";
}

ComparisonReport compare_to_oracle(SampleRegion region, std::size_t n, std::uint64_t seed,
                                   const PayoffTable& table, ClosedFormRoute route) {
  if (n == 0) throw std::invalid_argument("compare_to_oracle: n must be >= 1");
  if (route != ClosedFormRoute::kGeneral) region = SampleRegion::kMaximal;

  ComparisonReport report;
  report.region = region;
  report.seed = seed;
  switch (route) {
    case ClosedFormRoute::kGeneral:
      report.reference_name = "trace-rule";
      report.candidate_name = "closed-form";
      break;
    case ClosedFormRoute::kMaximalVsGeneral:
      report.reference_name = "closed-form";
      report.candidate_name = "maximal-closed-form";
      break;
    case ClosedFormRoute::kMaximalVsOracle:
      report.reference_name = "trace-rule";
      report.candidate_name = "maximal-closed-form";
      break;
  }

  SeededSampler rng(seed);
  report.samples.reserve(n);
  double sum_abs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ComparisonSample s;
    switch (region) {
      case SampleRegion::kUnrestricted:
      case SampleRegion::kPureTheta:
        s.gamma = rng.entanglement();
        s.delta = rng.entanglement();
        break;
      case SampleRegion::kClassical:
        break;
      case SampleRegion::kMaximal:
        s.gamma = kPi / 2;
        s.delta = kPi / 2;
        break;
    }
    s.profile = rng.profile();
    if (region == SampleRegion::kPureTheta) {
      for (Player k : kPlayers) {
        const StrategyParams& old = s.profile[k];
        s.profile[k] = StrategyParams(rng.coin() ? kPi : 0.0, old.alpha(), old.beta());
      }
    }
    const GameConfig config(s.gamma, s.delta, table);
    switch (route) {
      case ClosedFormRoute::kGeneral:
        s.reference = expected_payoffs(config, s.profile);
        s.candidate = closed_form_payoffs(config, s.profile);
        break;
      case ClosedFormRoute::kMaximalVsGeneral:
        s.reference = closed_form_payoffs(config, s.profile);
        s.candidate = maximal_entanglement_payoffs(config, s.profile);
        break;
      case ClosedFormRoute::kMaximalVsOracle:
        s.reference = expected_payoffs(config, s.profile);
        s.candidate = maximal_entanglement_payoffs(config, s.profile);
        break;
    }
    s.diff = sub(s.candidate, s.reference);
    for (Player k : kPlayers) {
      const double a = std::abs(s.diff[k]);
      if (!std::isfinite(a)) throw std::runtime_error("compare_to_oracle: non-finite difference");
      report.max_abs_diff = std::max(report.max_abs_diff, a);
      sum_abs += a;
    }
    report.samples.push_back(s);
  }
  report.mean_abs_diff = sum_abs / static_cast<double>(3 * n);
  return report;
}

}  // namespace qpd
