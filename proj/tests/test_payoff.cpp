#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qgame/game_model.hpp"
#include "qgame/hilbert.hpp"
#include "qgame/payoff.hpp"

using namespace qgame;

namespace {

LocalStrategy random_strategy(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> theta(0.0, kPi);
  std::uniform_real_distribution<double> phi(0.0, kTwoPi);
  return LocalStrategy(theta(rng), phi(rng));
}

Correlation random_correlation(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  return Correlation(angle(rng), angle(rng));
}

std::array<double, 4> random_values(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  return {dist(rng), dist(rng), dist(rng), dist(rng)};
}

}  // namespace

TEST_CASE("phase_coords at the reference stag hunt points") {
  // Row-flipped stag hunt: tau = -4, a00 - a11 = 3, a01 - a10 = -1.
  const ClassicalGame g = ClassicalGame::t_symmetric({3.0, 3.0, 4.0, 0.0});

  const PhaseCoords origin = phase_coords(g, Correlation(0.0, 0.0));
  CHECK(origin.gp_plus == 3.0);
  CHECK(origin.gp_minus == -1.0);
  CHECK(origin.g_plus == 0.0);
  CHECK(origin.g_minus == 0.0);
  CHECK(origin.ip_plus == 2.0);
  CHECK(origin.ip_minus == 4.0);
  CHECK(origin.h_plus == -2.0);
  CHECK(origin.h_minus == -6.0);

  const PhaseCoords me = phase_coords(g, Correlation(kPi / 2.0, 0.0));
  CHECK(me.gp_plus == 3.0);
  CHECK(std::abs(me.gp_minus) < 1e-12);
  CHECK(me.g_minus == -1.0);
  CHECK(me.g_plus == 0.0);
  CHECK(me.i_plus == -1.0);
  CHECK(me.i_minus == 1.0);
  CHECK(me.h_plus == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(me.h_minus == doctest::Approx(-7.0).epsilon(1e-12));
}

TEST_CASE("closed form is gated on the twist tag") {
  const ClassicalGame s = ClassicalGame::s_symmetric({4.0, 0.0, 3.0, 3.0});
  CHECK_THROWS_AS(phase_coords(s, Correlation(0.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(payoff_closed_form(s, LocalStrategy(0.0, 0.0), LocalStrategy(0.0, 0.0),
                                     Correlation(0.0, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("closed form and operator expectation agree for twist games") {
  std::mt19937_64 rng(21u);
  for (int trial = 0; trial < 1000; ++trial) {
    const ClassicalGame g = ClassicalGame::t_symmetric(random_values(rng));
    const LocalStrategy alpha = random_strategy(rng);
    const LocalStrategy beta = random_strategy(rng);
    const Correlation c = random_correlation(rng);
    const auto closed = payoff_closed_form(g, alpha, beta, c);
    const auto direct = payoff_operator_form(g, alpha, beta, c);
    const double tol = 1e-10 * g.scale();
    CHECK(std::abs(closed.first - direct.first) <= tol);
    CHECK(std::abs(closed.second - direct.second) <= tol);
  }
}

TEST_CASE("precomputed-coordinate entry point matches the public closed form") {
  std::mt19937_64 rng(22u);
  for (int trial = 0; trial < 100; ++trial) {
    const ClassicalGame g = ClassicalGame::t_symmetric(random_values(rng));
    const Correlation c = random_correlation(rng);
    const GameInvariants inv = invariants(g);
    const PhaseCoords pc = phase_coords(g, c);
    const LocalStrategy alpha = random_strategy(rng);
    const LocalStrategy beta = random_strategy(rng);
    const auto both = payoff_closed_form(g, alpha, beta, c);
    CHECK(payoff_closed_form_alice(inv, pc, alpha, beta) == both.first);
    CHECK(payoff_closed_form_alice(inv, pc, beta.basis_flipped(), alpha.basis_flipped()) ==
          both.second);
  }
}

TEST_CASE("Bob's twist payoff is Alice's at the flipped swapped arguments") {
  std::mt19937_64 rng(23u);
  for (int trial = 0; trial < 200; ++trial) {
    const ClassicalGame g = ClassicalGame::t_symmetric(random_values(rng));
    const LocalStrategy alpha = random_strategy(rng);
    const LocalStrategy beta = random_strategy(rng);
    const Correlation c = random_correlation(rng);
    const double pi_b = payoff_operator_form(g, alpha, beta, c).second;
    const double pi_a_flipped =
        payoff_operator_form(g, beta.basis_flipped(), alpha.basis_flipped(), c).first;
    CHECK(std::abs(pi_b - pi_a_flipped) <= 1e-10 * g.scale());
  }
}

TEST_CASE("payoff_pair uses the exchange relation for S games") {
  std::mt19937_64 rng(24u);
  for (int trial = 0; trial < 200; ++trial) {
    const ClassicalGame g = ClassicalGame::s_symmetric(random_values(rng));
    const LocalStrategy alpha = random_strategy(rng);
    const LocalStrategy beta = random_strategy(rng);
    const Correlation c = random_correlation(rng);
    const auto fast = payoff_pair(g, alpha, beta, c);
    const auto direct = payoff_operator_form(g, alpha, beta, c);
    const double tol = 1e-10 * g.scale();
    CHECK(std::abs(fast.first - direct.first) <= tol);
    CHECK(std::abs(fast.second - direct.second) <= tol);
    // PiB(alpha, beta) = PiA(beta, alpha) under exchange symmetry.
    CHECK(std::abs(fast.second - payoff_pair(g, beta, alpha, c).first) <= tol);
  }
}

TEST_CASE("payoff_pair falls back to expectations for explicit games") {
  std::mt19937_64 rng(25u);
  const ClassicalGame g = ClassicalGame::explicit_game(random_values(rng), random_values(rng));
  const LocalStrategy alpha = random_strategy(rng);
  const LocalStrategy beta = random_strategy(rng);
  const Correlation c = random_correlation(rng);
  const auto fast = payoff_pair(g, alpha, beta, c);
  const auto direct = payoff_operator_form(g, alpha, beta, c);
  CHECK(fast.first == direct.first);
  CHECK(fast.second == direct.second);
}

TEST_CASE("uncorrelated pure strategies reproduce the matrix entries") {
  const ClassicalGame g = ClassicalGame::explicit_game({3.0, 0.0, 5.0, 1.0},
                                                       {1.0, 2.0, 3.0, 9.0});
  const Correlation zero(0.0, 0.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const LocalStrategy alpha(i ? kPi : 0.0, 0.0);
      const LocalStrategy beta(j ? kPi : 0.0, 0.0);
      const auto [pi_a, pi_b] = payoff_pair(g, alpha, beta, zero);
      CHECK(pi_a == doctest::Approx(g.a(i, j)).epsilon(1e-12));
      CHECK(pi_b == doctest::Approx(g.b(i, j)).epsilon(1e-12));
    }
}

TEST_CASE("classical limit matches the uncorrelated quantum payoff") {
  std::mt19937_64 rng(26u);
  const Correlation zero(0.0, 0.0);
  for (int trial = 0; trial < 200; ++trial) {
    const ClassicalGame g = ClassicalGame::explicit_game(random_values(rng), random_values(rng));
    const LocalStrategy alpha = random_strategy(rng);
    const LocalStrategy beta = random_strategy(rng);
    // The phases drop out of the uncorrelated probabilities.
    const double x1 = std::sin(alpha.theta / 2.0) * std::sin(alpha.theta / 2.0);
    const double y1 = std::sin(beta.theta / 2.0) * std::sin(beta.theta / 2.0);
    const auto mixed = payoff_classical_limit(g, x1, y1);
    const auto quantum = payoff_operator_form(g, alpha, beta, zero);
    const double tol = 1e-10 * g.scale();
    CHECK(std::abs(mixed.first - quantum.first) <= tol);
    CHECK(std::abs(mixed.second - quantum.second) <= tol);
  }
}

TEST_CASE("classical limit rejects probabilities outside the unit square") {
  const ClassicalGame g = ClassicalGame::t_symmetric({2.0, 0.0, 0.0, 1.0});
  CHECK_THROWS_AS(payoff_classical_limit(g, -0.1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(payoff_classical_limit(g, 0.5, 1.1), std::invalid_argument);
  // Values a rounding error outside are clamped, not rejected.
  CHECK(payoff_classical_limit(g, 1.0 + 1e-14, 0.0).first ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("correlated payoff operator splits into diagonal and interference parts") {
  std::mt19937_64 rng(27u);
  for (int trial = 0; trial < 100; ++trial) {
    const ClassicalGame g = ClassicalGame::explicit_game(random_values(rng), random_values(rng));
    const Correlation c = random_correlation(rng);
    const auto [pseudo, interference] = decompose_correlated_payoff(g, c);

    // The two parts rebuild the conjugated payoff operator.
    const Operator4 j = correlation_unitary(c);
    const Operator4 dressed = j.adjoint() * quantize(g).op_a * j;
    CHECK((pseudo + interference).max_abs_diff(dressed) <= 1e-12 * g.scale());

    // Permutation conjugates of a diagonal matrix stay diagonal.
    for (int r = 0; r < 4; ++r)
      for (int col = 0; col < 4; ++col)
        if (r != col) CHECK(std::abs(pseudo.at(r, col)) == 0.0);

    // Commutators with permutations have empty diagonals, so basis states
    // never see the interference term.
    for (int k = 0; k < 4; ++k) CHECK(std::abs(interference.at(k, k)) == 0.0);
  }
}

TEST_CASE("decomposition collapses to the bare payoff operator without correlation") {
  const ClassicalGame g = ClassicalGame::t_symmetric({3.0, 0.0, 5.0, 1.0});
  const auto [pseudo, interference] = decompose_correlated_payoff(g, Correlation(0.0, 0.0));
  CHECK(pseudo.max_abs_diff(quantize(g).op_a) == 0.0);
  CHECK(interference.max_abs() == 0.0);
}

TEST_CASE("row-flip duality maps payoffs exactly onto the partner game") {
  std::mt19937_64 rng(28u);
  for (int trial = 0; trial < 300; ++trial) {
    const bool twist = trial % 2 == 0;
    const std::array<double, 4> v = random_values(rng);
    const ClassicalGame g =
        twist ? ClassicalGame::t_symmetric(v) : ClassicalGame::s_symmetric(v);
    const ClassicalGame dual = dualize(g, DualityMap::Alice);
    const LocalStrategy alpha = random_strategy(rng);
    const LocalStrategy beta = random_strategy(rng);
    const Correlation c = random_correlation(rng);
    const auto [alpha_bar, c_bar] = dual_strategy_map(alpha, c);
    const auto original = payoff_pair(g, alpha, beta, c);
    const auto mapped = payoff_pair(dual, alpha_bar, beta, c_bar);
    const double tol = 1e-10 * g.scale();
    CHECK(std::abs(original.first - mapped.first) <= tol);
    CHECK(std::abs(original.second - mapped.second) <= tol);
  }
}

TEST_CASE("column-flip and double-flip duality map payoffs the same way") {
  std::mt19937_64 rng(29u);
  for (int trial = 0; trial < 200; ++trial) {
    const ClassicalGame g = ClassicalGame::t_symmetric(random_values(rng));
    const LocalStrategy alpha = random_strategy(rng);
    const LocalStrategy beta = random_strategy(rng);
    const Correlation c = random_correlation(rng);
    const auto original = payoff_pair(g, alpha, beta, c);
    const double tol = 1e-10 * g.scale();

    // Column flip moves Bob's strategy and swaps the correlation angles.
    const auto [beta_bar, c_bar] = dual_strategy_map(beta, c);
    const auto via_bob = payoff_pair(dualize(g, DualityMap::Bob), alpha, beta_bar, c_bar);
    CHECK(std::abs(original.first - via_bob.first) <= tol);
    CHECK(std::abs(original.second - via_bob.second) <= tol);

    // The double flip moves both strategies and keeps the angles.
    const auto via_full = payoff_pair(dualize(g, DualityMap::Full), alpha.basis_flipped(),
                                      beta.basis_flipped(), c);
    CHECK(std::abs(original.first - via_full.first) <= tol);
    CHECK(std::abs(original.second - via_full.second) <= tol);
  }
}
