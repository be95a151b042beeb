#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qgame/equilibrium.hpp"
#include "qgame/game_model.hpp"
#include "qgame/hilbert.hpp"
#include "qgame/payoff.hpp"

using namespace qgame;

namespace {

// Row-flipped stag hunt (4,0,3,3) and prisoner's dilemma (3,0,5,1) fixtures.
ClassicalGame stag_hunt_dual() { return ClassicalGame::t_symmetric({3.0, 3.0, 4.0, 0.0}); }
ClassicalGame pd_dual() { return ClassicalGame::t_symmetric({5.0, 1.0, 3.0, 0.0}); }
ClassicalGame bos() { return ClassicalGame::t_symmetric({2.0, 0.0, 0.0, 1.0}); }

std::array<double, 4> random_values(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

Correlation random_correlation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  return Correlation(angle(rng), angle(rng));
}

}  // namespace

TEST_CASE("edge strategies and twist partners") {
  CHECK(edge_alice(kEdge00).theta == 0.0);
  CHECK(edge_alice(kEdge01).theta == 0.0);
  CHECK(edge_alice(kEdge10).theta == kPi);
  CHECK(edge_bob(kEdge01).theta == kPi);
  CHECK(edge_bob(kEdge10).theta == 0.0);
  CHECK(edge_bob(kEdge11).theta == kPi);

  CHECK(twist_partner(kEdge00) == kEdge11);
  CHECK(twist_partner(kEdge11) == kEdge00);
  CHECK(twist_partner(kEdge01) == kEdge01);
  CHECK(twist_partner(kEdge10) == kEdge10);
}

TEST_CASE("edge equilibria of the stag hunt at the classical point") {
  const EdgeQneReport r = edge_qne(stag_hunt_dual(), Correlation(0.0, 0.0));
  CHECK(r.mask() == 0b0110u);
  CHECK_FALSE(r.present[kEdge00]);
  CHECK_FALSE(r.present[kEdge11]);
  CHECK_FALSE(r.boundary[kEdge01]);
  REQUIRE(r.payoffs[kEdge01].has_value());
  REQUIRE(r.payoffs[kEdge10].has_value());
  CHECK(r.payoffs[kEdge01]->first == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.payoffs[kEdge01]->second == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.payoffs[kEdge10]->first == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r.payoffs[kEdge10]->second == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_FALSE(r.payoffs[kEdge00].has_value());
}

TEST_CASE("edge equilibria of the stag hunt at the payoff-equalizing point") {
  const EdgeQneReport r = edge_qne(stag_hunt_dual(), Correlation(kPi / 2.0, 0.0));
  CHECK(r.mask() == 0b0110u);
  CHECK(r.payoffs[kEdge01]->first == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(r.payoffs[kEdge01]->second == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(r.payoffs[kEdge10]->first == doctest::Approx(3.5).epsilon(1e-12));
  CHECK(r.payoffs[kEdge10]->second == doctest::Approx(3.5).epsilon(1e-12));
}

TEST_CASE("the prisoner's dilemma keeps only its defect edge at gamma = 0") {
  const EdgeQneReport r = edge_qne(pd_dual(), Correlation(0.0, 0.0));
  CHECK(r.mask() == 0b0010u);
  CHECK(r.payoffs[kEdge01]->first == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.payoffs[kEdge01]->second == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("battle of the sexes keeps the diagonal pair everywhere") {
  std::mt19937_64 rng(31u);
  for (int trial = 0; trial < 50; ++trial) {
    const Correlation c = random_correlation(rng);
    const EdgeQneReport r = edge_qne(bos(), c);
    CHECK(r.mask() == 0b1001u);
  }
  const EdgeQneReport mid = edge_qne(bos(), Correlation(0.0, kPi / 2.0));
  CHECK(mid.payoffs[kEdge00]->first == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(mid.payoffs[kEdge00]->second == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(mid.payoffs[kEdge11]->first == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("edge payoffs interpolate the classical entries") {
  CHECK(edge_payoff_interpolation(bos(), kEdge00, Correlation(0.0, kPi / 2.0)) ==
        doctest::Approx(1.5).epsilon(1e-12));
  CHECK(edge_payoff_interpolation(stag_hunt_dual(), kEdge10, Correlation(kPi / 2.0, 0.0)) ==
        doctest::Approx(3.5).epsilon(1e-12));

  std::mt19937_64 rng(32u);
  for (int trial = 0; trial < 100; ++trial) {
    const ClassicalGame g = ClassicalGame::t_symmetric(random_values(rng));
    const Correlation c = random_correlation(rng);
    for (int e = 0; e < 4; ++e) {
      const Edge edge = Edge(e);
      const double interp = edge_payoff_interpolation(g, edge, c);
      // At gamma = 0 the edge payoff is the bare matrix entry.
      CHECK(edge_payoff_interpolation(g, edge, Correlation(0.0, 0.0)) ==
            g.a(e >> 1, e & 1));
      // The interpolated value is the correlated expectation at that edge.
      const auto direct = payoff_pair(g, edge_alice(edge), edge_bob(edge), c);
      CHECK(std::abs(interp - direct.first) <= 1e-10 * g.scale());
      // Bob sits on the twisted edge.
      CHECK(std::abs(edge_payoff_interpolation(g, twist_partner(edge), c) - direct.second) <=
            1e-10 * g.scale());
    }
  }
}

TEST_CASE("edge sign conditions match brute-force best response") {
  std::mt19937_64 rng(33u);
  int checked = 0;
  while (checked < 60) {
    const ClassicalGame g = ClassicalGame::t_symmetric(random_values(rng));
    const Correlation c = random_correlation(rng);
    const PhaseCoords pc = phase_coords(g, c);
    const double margin = 1e-3 * g.scale();
    if (std::abs(pc.h_plus) < margin || std::abs(pc.h_minus) < margin) continue;
    ++checked;
    const EdgeQneReport r = edge_qne(g, c);
    for (int e = 0; e < 4; ++e) {
      const VerifyResult v =
          verify_qne_bruteforce(g, c, edge_alice(Edge(e)), edge_bob(Edge(e)), 24);
      CHECK(v.confirmed == r.present[e]);
    }
  }
}

TEST_CASE("non-edge equilibrium of the stag hunt at the classical point") {
  const NonEdgeSearch s = nonedge_qne_search(stag_hunt_dual(), Correlation(0.0, 0.0));
  REQUIRE(s.status == NonEdgeStatus::Found);
  const NonEdgeQne& q = *s.qne;
  CHECK(q.alpha.theta == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-12));
  CHECK(q.alpha.phi == 0.0);
  CHECK(q.beta.theta == doctest::Approx(kPi / 3.0).epsilon(1e-12));
  CHECK(q.delta == 0.0);
  CHECK(q.payoff == doctest::Approx(3.0).epsilon(1e-12));

  // Occupation probability of |1> coincides with the classical mixture.
  const auto mixed = classical_mixed_ne(stag_hunt_dual());
  REQUIRE(mixed.has_value());
  const double c_half = std::cos(q.alpha.theta / 2.0);
  CHECK(c_half * c_half == doctest::Approx(mixed->prob).epsilon(1e-12));
  CHECK(mixed->prob == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(mixed->payoff == doctest::Approx(3.0).epsilon(1e-12));

  // The joint correlated state is fixed by the twist up to phase.
  const JointState state =
      correlation_unitary(Correlation(0.0, 0.0)).apply(product_state(q.alpha, q.beta));
  CHECK(state.same_up_to_phase(twist_op().apply(state)));
}

TEST_CASE("non-edge equilibrium of the stag hunt at the payoff-equalizing point") {
  const Correlation c(kPi / 2.0, 0.0);
  const NonEdgeSearch s = nonedge_qne_search(stag_hunt_dual(), c);
  REQUIRE(s.status == NonEdgeStatus::Found);
  const NonEdgeQne& q = *s.qne;
  CHECK(q.delta == 1.0);
  CHECK(q.alpha.theta == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(q.alpha.phi == doctest::Approx(kPi / 4.0).epsilon(1e-12));
  CHECK(q.beta.theta == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q.beta.phi == doctest::Approx(7.0 * kPi / 4.0).epsilon(1e-12));
  CHECK(q.payoff == doctest::Approx(3.5).epsilon(1e-12));

  const JointState state = correlation_unitary(c).apply(product_state(q.alpha, q.beta));
  CHECK(state.same_up_to_phase(twist_op().apply(state)));

  // Matches the edge payoffs at this correlation: the equalizing property.
  const EdgeQneReport r = edge_qne(stag_hunt_dual(), c);
  CHECK(q.payoff == doctest::Approx(r.payoffs[kEdge01]->first).epsilon(1e-12));
}

TEST_CASE("the prisoner's dilemma has no non-edge equilibrium") {
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      const Correlation c(kTwoPi * i / 16.0, kTwoPi * j / 16.0);
      CHECK(nonedge_qne_search(pd_dual(), c).status != NonEdgeStatus::Found);
      CHECK_FALSE(nonedge_qne(pd_dual(), c).has_value());
    }
}

TEST_CASE("battle of the sexes only admits the non-edge branch on the axis") {
  CHECK(nonedge_qne_search(bos(), Correlation(1.0, kPi / 3.0)).status ==
        NonEdgeStatus::DegenerateBranch);
  CHECK(nonedge_qne_search(bos(), Correlation(0.3, kPi / 2.0)).status ==
        NonEdgeStatus::DegenerateBranch);

  for (double g2 : {0.0, kPi}) {
    const NonEdgeSearch s = nonedge_qne_search(bos(), Correlation(0.7, g2));
    REQUIRE(s.status == NonEdgeStatus::Found);
    CHECK(s.qne->payoff == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    // Worse than the lesser diagonal entry: the coordination dilemma stands.
    CHECK(s.qne->payoff < 1.0);
  }
}

TEST_CASE("found non-edge solutions are stationary for both players") {
  std::mt19937_64 rng(34u);
  int found = 0;
  int trials = 0;
  while (found < 50 && trials < 5000) {
    ++trials;
    const ClassicalGame g = ClassicalGame::t_symmetric(random_values(rng));
    const Correlation c = random_correlation(rng);
    const NonEdgeSearch s = nonedge_qne_search(g, c);
    if (s.status != NonEdgeStatus::Found) continue;
    ++found;
    CHECK(qne_first_order_residual(g, s.qne->alpha, s.qne->beta, c) <= 1e-8 * g.scale());
  }
  CHECK(found == 50);
}

TEST_CASE("found non-edge solutions away from branch boundaries survive brute force") {
  std::mt19937_64 rng(35u);
  int confirmed_checks = 0;
  int trials = 0;
  while (confirmed_checks < 10 && trials < 20000) {
    ++trials;
    const ClassicalGame g = ClassicalGame::t_symmetric(random_values(rng));
    const Correlation c = random_correlation(rng);
    const PhaseCoords pc = phase_coords(g, c);
    const GameInvariants inv = invariants(g);
    const NonEdgeSearch s = nonedge_qne_search(g, c);
    if (s.status != NonEdgeStatus::Found) continue;
    const double d = s.qne->delta;
    // Keep clear margins to the existence boundaries before insisting on a
    // confirmed equilibrium.
    const double sc = g.scale();
    if (d * d < 1e-2 * sc * sc) continue;
    if ((pc.h_plus + d) * (pc.h_minus + d) < 1e-2 * sc * sc) continue;
    if (std::abs(inv.tau + d) < 1e-1 * sc) continue;
    const double r = pc.ip_plus / (inv.tau + d);
    if (std::abs(r) > 0.98) continue;
    ++confirmed_checks;
    const VerifyResult v = verify_qne_bruteforce(g, c, s.qne->alpha, s.qne->beta, 32, 1e-6 * sc);
    CHECK(v.confirmed);
  }
  CHECK(confirmed_checks == 10);
}

TEST_CASE("classical mixed equilibrium values and absence") {
  const auto sh = classical_mixed_ne(stag_hunt_dual());
  REQUIRE(sh.has_value());
  CHECK(sh->prob == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(sh->payoff == doctest::Approx(3.0).epsilon(1e-12));

  // sigma_plus = 3 exceeds tau = 1: one strategy dominates the mixture.
  CHECK_FALSE(classical_mixed_ne(pd_dual()).has_value());

  const auto b = classical_mixed_ne(bos());
  REQUIRE(b.has_value());
  CHECK(b->prob == doctest::Approx((1.0 + 1.0 / 3.0) / 2.0).epsilon(1e-12));
  CHECK(b->payoff == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

  CHECK_THROWS_AS(classical_mixed_ne(ClassicalGame::t_symmetric({1.0, 1.0, 1.0, 1.0})), TauZero);
  CHECK_THROWS_AS(classical_mixed_ne(ClassicalGame::s_symmetric({2.0, 0.0, 0.0, 1.0})),
                  std::invalid_argument);
}

TEST_CASE("brute-force verifier confirms and refutes with a deterministic witness") {
  const ClassicalGame g = stag_hunt_dual();
  const Correlation c(0.0, 0.0);

  CHECK(verify_qne_bruteforce(g, c, edge_alice(kEdge10), edge_bob(kEdge10)).confirmed);

  const VerifyResult bad = verify_qne_bruteforce(g, c, edge_alice(kEdge00), edge_bob(kEdge00));
  CHECK_FALSE(bad.confirmed);
  REQUIRE(bad.witness.has_value());
  // h_plus = -2 at gamma = 0, so flipping to |1> gains exactly 1.
  CHECK(bad.witness->player == Player::Alice);
  CHECK(bad.witness->improvement == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(bad.witness->deviation.theta == doctest::Approx(kPi).epsilon(1e-12));

  const VerifyResult again = verify_qne_bruteforce(g, c, edge_alice(kEdge00), edge_bob(kEdge00));
  REQUIRE(again.witness.has_value());
  CHECK(again.witness->deviation.theta == bad.witness->deviation.theta);
  CHECK(again.witness->deviation.phi == bad.witness->deviation.phi);
  CHECK(again.witness->improvement == bad.witness->improvement);

  // Constant payoffs: everything is an equilibrium.
  const ClassicalGame flat = ClassicalGame::t_symmetric({2.0, 2.0, 2.0, 2.0});
  CHECK(verify_qne_bruteforce(flat, Correlation(1.0, 2.0), LocalStrategy(1.0, 1.0),
                              LocalStrategy(2.0, 0.5))
            .confirmed);

  CHECK_THROWS_AS(verify_qne_bruteforce(g, c, edge_alice(kEdge00), edge_bob(kEdge00), 7),
                  std::invalid_argument);
}

TEST_CASE("verifier handles exchange-symmetric and explicit games") {
  // Exchange-symmetric stag hunt: at gamma = 0 the pure stag pair |0,0> is an
  // equilibrium of the classical game.
  const ClassicalGame s = ClassicalGame::s_symmetric({4.0, 0.0, 3.0, 3.0});
  const Correlation zero(0.0, 0.0);
  CHECK(verify_qne_bruteforce(s, zero, LocalStrategy(0.0, 0.0), LocalStrategy(0.0, 0.0), 24)
            .confirmed);
  // Hare against stag is not.
  CHECK_FALSE(verify_qne_bruteforce(s, zero, LocalStrategy(kPi, 0.0), LocalStrategy(0.0, 0.0), 24)
                  .confirmed);

  const ClassicalGame e = ClassicalGame::explicit_game({3.0, 0.0, 5.0, 1.0}, {3.0, 5.0, 0.0, 1.0});
  // Mutual defection of the symmetric prisoner's dilemma.
  CHECK(verify_qne_bruteforce(e, zero, LocalStrategy(kPi, 0.0), LocalStrategy(kPi, 0.0), 24)
            .confirmed);
  CHECK_FALSE(
      verify_qne_bruteforce(e, zero, LocalStrategy(0.0, 0.0), LocalStrategy(0.0, 0.0), 24)
          .confirmed);
}

TEST_CASE("uncorrelated non-edge branch coincides with the classical mixture") {
  std::mt19937_64 rng(36u);
  const Correlation zero(0.0, 0.0);
  int checked = 0;
  while (checked < 200) {
    const ClassicalGame g = ClassicalGame::t_symmetric(random_values(rng));
    const GameInvariants inv = invariants(g);
    const double sc = g.scale();
    if (std::abs(inv.tau) < 1e-3 * sc) continue;
    if (std::abs(std::abs(inv.sigma_plus) - std::abs(inv.tau)) < 1e-6 * sc) continue;
    ++checked;
    const NonEdgeSearch s = nonedge_qne_search(g, zero);
    const auto mixed = classical_mixed_ne(g);
    CHECK((s.status == NonEdgeStatus::Found) == mixed.has_value());
    if (s.status == NonEdgeStatus::Found && mixed.has_value()) {
      CHECK(std::abs(s.qne->payoff - mixed->payoff) <= 1e-10 * sc);
      const double c_half = std::cos(s.qne->alpha.theta / 2.0);
      CHECK(std::abs(c_half * c_half - mixed->prob) <= 1e-10);
    }
  }
}

TEST_CASE("interior candidate sweep ranks by residual and finds the analytic branch") {
  const ClassicalGame g = stag_hunt_dual();
  const Correlation c(0.0, 0.0);
  const auto cands = interior_stationary_candidates(g, c, 8, 5);
  REQUIRE(cands.size() == 5);
  for (size_t i = 1; i < cands.size(); ++i) CHECK(cands[i - 1].residual <= cands[i].residual);
  for (const auto& cand : cands)
    CHECK(cand.residual == qne_first_order_residual(g, cand.alpha, cand.beta, c));

  // The analytic non-edge solution out-scores every grid candidate.
  const NonEdgeSearch s = nonedge_qne_search(g, c);
  REQUIRE(s.status == NonEdgeStatus::Found);
  CHECK(qne_first_order_residual(g, s.qne->alpha, s.qne->beta, c) <= 1e-12);

  CHECK_THROWS_AS(interior_stationary_candidates(g, c, 3, 5), std::invalid_argument);
}
