// Quantum Nash equilibria of T-symmetric games: the four edge (pure basis)
// candidates, the T-symmetric non-edge branch, the classical mixed
// equilibrium, and a grid-search best-response verifier.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qgame/payoff.hpp"

namespace qgame {

struct TauZero : std::runtime_error {
  explicit TauZero(const std::string& what) : std::runtime_error(what) {}
};

// Pure joint basis states, indexed like the basis: e = 2i + j for |ij>.
enum Edge : int { kEdge00 = 0, kEdge01 = 1, kEdge10 = 2, kEdge11 = 3 };

LocalStrategy edge_alice(Edge e);  // |0> or |1> as a strategy
LocalStrategy edge_bob(Edge e);
Edge twist_partner(Edge e);  // |ij> -> |j~,i~|

struct EdgeQneReport {
  // present[e]: the sign conditions hold strictly (h_plus/h_minus outside the
  // epsilon band). boundary[e]: a deciding h value sits inside the band.
  std::array<bool, 4> present{};
  std::array<bool, 4> boundary{};
  // (PiA, PiB); filled iff present or boundary.
  std::array<std::optional<std::pair<double, double>>, 4> payoffs{};

  unsigned mask() const;  // bit e set iff present[e]
};

// Sign conditions per edge:
//   |00>, |11>:  h_plus > 0 and h_minus > 0
//   |01>:        h_minus < 0
//   |10>:        h_plus < 0
// evaluated with the band eps = 1e-9 * max(1, |tau|, |ip_plus|).
EdgeQneReport edge_qne(const ClassicalGame& g, const Correlation& c);

// Payoff of an edge as an interpolation between classical entries:
//   diagonal |ii>:       cos^2(g2/2) a_ii  + sin^2(g2/2) a_i~i~
//   anti-diagonal |ij~>: cos^2(g1/2) a_ij~ + sin^2(g1/2) a_i~j
double edge_payoff_interpolation(const ClassicalGame& g, Edge e, const Correlation& c);

struct NonEdgeQne {
  LocalStrategy alpha;
  LocalStrategy beta;  // = alpha.basis_flipped(); the joint state is T-fixed
  double payoff = 0.0; // both players, = 1/4 [Tr A + (tau*delta - s+s-)/(tau+delta)]
  double delta = 0.0;  // sqrt(g_minus^2 - g_plus^2) >= 0
};

enum class NonEdgeStatus {
  Found,
  NoSolution,        // branch conditions fail
  DegenerateBranch,  // g_minus = 0 with g_plus != 0: the phase equation has no root
};

struct NonEdgeSearch {
  NonEdgeStatus status = NonEdgeStatus::NoSolution;
  std::optional<NonEdgeQne> qne;
};

NonEdgeSearch nonedge_qne_search(const ClassicalGame& g, const Correlation& c);
std::optional<NonEdgeQne> nonedge_qne(const ClassicalGame& g, const Correlation& c);

struct MixedNe {
  double prob = 0.0;    // cos^2(alpha1*/2) with cos(alpha1*) = sigma_plus / tau
  double payoff = 0.0;  // (a00 a11 - a01 a10) / tau, same for both players
};

// Classical interior mixed equilibrium of a T-symmetric game. Absent when
// |sigma_plus| > |tau|. Throws TauZero when tau = 0.
std::optional<MixedNe> classical_mixed_ne(const ClassicalGame& g);

enum class Player { Alice, Bob };

struct DeviationWitness {
  Player player = Player::Alice;
  LocalStrategy deviation;
  double improvement = 0.0;
};

struct VerifyResult {
  bool confirmed = false;
  std::optional<DeviationWitness> witness;  // set when refuted
};

// Grid search over unilateral deviations, theta x phi per player, with one 3x
// local refinement around the best grid deviation. Confirmed iff no deviation
// improves the deviating player's payoff by more than tol. Ties between grid
// deviations go to the lowest index, and Alice is checked before Bob, so the
// witness is deterministic.
VerifyResult verify_qne_bruteforce(const ClassicalGame& g, const Correlation& c,
                                   const LocalStrategy& alpha, const LocalStrategy& beta,
                                   int grid_n = 64, double tol = 1e-7);

// Max absolute first-order residual of both players' stationarity conditions
// at (alpha, beta). Zero at any interior equilibrium.
double qne_first_order_residual(const ClassicalGame& g, const LocalStrategy& alpha,
                                const LocalStrategy& beta, const Correlation& c);

struct InteriorCandidate {
  LocalStrategy alpha;
  LocalStrategy beta;
  double residual = 0.0;
};

// Diagnostic sweep over a full 4-angle grid (both thetas interior): the k
// joint strategies with the smallest first-order residual. Used to probe for
// equilibria outside the T-symmetric ansatz.
std::vector<InteriorCandidate> interior_stationary_candidates(const ClassicalGame& g,
                                                              const Correlation& c,
                                                              int grid_n, int k);

}  // namespace qgame
