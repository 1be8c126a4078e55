#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qpd/closed_form.hpp"
#include "qpd/sampling.hpp"
#include "support/helpers.hpp"

using namespace qpd;
using qpd::testing::check_triple;

TEST_CASE("closed-form coefficient identities on a 20^3 grid") {
  const Profile zero{};
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      for (int k = 0; k < 20; ++k) {
        const double gamma = (kPi / 2) * i / 19.0;
        const double delta = (kPi / 2) * j / 19.0;
        const double theta = kPi * k / 19.0;
        Profile p = zero;
        p.alice = StrategyParams(theta, 0, 0);
        const auto t = closed_form_terms(gamma, delta, p);
        CHECK(std::abs(t.eta1 + t.eta2 - 1.0) < kAlgebraTol);
        CHECK(t.eta1 >= -kAlgebraTol);
        CHECK(t.eta2 >= -kAlgebraTol);
        CHECK(t.xi >= -kAlgebraTol);
        CHECK(t.xi <= 0.5 + kAlgebraTol);
        CHECK(std::abs(t.c[0] + t.s[0] - 1.0) < kAlgebraTol);
      }
    }
  }
}

TEST_CASE("general expression collapses to classical play at gamma = delta = 0") {
  SeededSampler rng(31);
  const GameConfig cfg(0, 0);
  for (int i = 0; i < 1000; ++i) {
    const Profile p = rng.profile();
    std::array<double, 3> q{};
    for (Player k : kPlayers) q[static_cast<std::size_t>(k)] = std::pow(std::sin(p[k].theta() / 2), 2);
    CHECK(closed_form_payoffs(cfg, p).max_abs_diff(classical_payoff(cfg.payoffs(), q)) < kPayoffTol);
  }
}

TEST_CASE("general expression examples") {
  const StrategyParams d(kPi, 0, 0);
  check_triple(closed_form_payoffs(GameConfig(0, 0), Profile{d, d, d}), 1, 1, 1, kPayoffTol);
  const StrategyParams a(0, kPi, kPi);
  const StrategyParams c(0, 0, 0);
  check_triple(closed_form_payoffs(GameConfig(kPi / 2, kPi / 2), Profile{a, c, c}), 3, 3, 3,
               kPayoffTol);
}

TEST_CASE("general expression ignores phases at gamma = delta = 0") {
  SeededSampler rng(32);
  const GameConfig cfg(0, 0);
  for (int i = 0; i < 200; ++i) {
    Profile p = rng.profile();
    const auto before = closed_form_payoffs(cfg, p);
    for (Player k : kPlayers) p[k] = StrategyParams(p[k].theta(), rng.phase(), rng.phase());
    CHECK(closed_form_payoffs(cfg, p).max_abs_diff(before) < kPayoffTol);
  }
}

TEST_CASE("maximal-entanglement expression as printed") {
  const GameConfig cfg(kPi / 2, kPi / 2);
  // With xi = 1/2 inside a bracket already halved, the cooperative corner
  // evaluates to (4 + 1)/2 rather than 3; the oracle and general expression give 3.
  const StrategyParams a(0, kPi, kPi);
  const StrategyParams c(0, 0, 0);
  check_triple(maximal_entanglement_payoffs(cfg, Profile{a, c, c}), 2.5, 2.5, 2.5, kPayoffTol);
  check_triple(expected_payoffs(cfg, Profile{a, c, c}), 3, 3, 3, kPayoffTol);

  // All theta = pi, beta_A = 0: only the s_A s_B s_C term survives, (4 - 1)/2.
  const StrategyParams d(kPi, 0, 0);
  check_triple(maximal_entanglement_payoffs(cfg, Profile{d, d, d}), 1.5, 1.5, 1.5, kPayoffTol);

  CHECK_THROWS_AS(maximal_entanglement_payoffs(GameConfig(kPi / 2, 1.0), Profile{}),
                  std::invalid_argument);
  CHECK_THROWS_AS(maximal_entanglement_payoffs(GameConfig(0, kPi / 2), Profile{}),
                  std::invalid_argument);
}

TEST_CASE("oracle comparison: classical region agrees") {
  const auto r = compare_to_oracle(SampleRegion::kClassical, 1000, 7);
  CHECK(r.samples.size() == 1000);
  CHECK(r.max_abs_diff < kPayoffTol);
  for (const auto& s : r.samples) {
    CHECK(s.gamma == 0.0);
    CHECK(s.delta == 0.0);
  }
}

TEST_CASE("oracle comparison: other regions produce finite reports") {
  const auto pure = compare_to_oracle(SampleRegion::kPureTheta, 200, 8);
  for (const auto& s : pure.samples) {
    for (Player k : kPlayers) {
      const double th = s.profile[k].theta();
      CHECK((th == 0.0 || th == kPi));
    }
  }
  CHECK(std::isfinite(pure.max_abs_diff));

  const auto all = compare_to_oracle(SampleRegion::kUnrestricted, 1000, 9);
  CHECK(all.samples.size() == 1000);
  CHECK(std::isfinite(all.mean_abs_diff));
  CHECK(all.mean_abs_diff <= all.max_abs_diff);
  for (const auto& s : all.samples) {
    CHECK(s.diff.max_abs_diff(PayoffTriple{}) ==
          doctest::Approx(s.candidate.max_abs_diff(s.reference)));
  }

  const auto mg = compare_to_oracle(SampleRegion::kUnrestricted, 100, 10, {},
                                    ClosedFormRoute::kMaximalVsGeneral);
  CHECK(mg.region == SampleRegion::kMaximal);
  for (const auto& s : mg.samples) {
    CHECK(s.gamma == kPi / 2);
    CHECK(s.delta == kPi / 2);
  }
}

TEST_CASE("oracle comparison is deterministic per seed") {
  const auto a = compare_to_oracle(SampleRegion::kUnrestricted, 50, 123);
  const auto b = compare_to_oracle(SampleRegion::kUnrestricted, 50, 123);
  const auto c = compare_to_oracle(SampleRegion::kUnrestricted, 50, 124);
  REQUIRE(a.samples.size() == b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    CHECK(a.samples[i].gamma == b.samples[i].gamma);
    CHECK(a.samples[i].profile.alice == b.samples[i].profile.alice);
    CHECK(a.samples[i].candidate.alice == b.samples[i].candidate.alice);
  }
  CHECK(a.max_abs_diff == b.max_abs_diff);
  CHECK(a.samples[0].gamma != c.samples[0].gamma);
}

TEST_CASE("oracle comparison rejects an empty sample") {
  CHECK_THROWS_AS(compare_to_oracle(SampleRegion::kUnrestricted, 0, 1), std::invalid_argument);
}
