// Payoff evaluation: the trigonometric closed form for T-symmetric games,
// the operator expectation route for any game, the classical limit, and the
// split of the correlated payoff operator into pseudo-classical and
// interference parts.

#pragma once

#include <utility>

#include "qgame/game_model.hpp"

namespace qgame {

// Correlation-dressed payoff differences for a T-symmetric game.
//   g_plus   = (a00 - a11) sin gamma2     gp_plus  = (a00 - a11) cos gamma2
//   g_minus  = (a01 - a10) sin gamma1     gp_minus = (a01 - a10) cos gamma1
//   i_plus/minus  = g_plus +- g_minus
//   ip_plus/minus = gp_plus +- gp_minus
//   h_plus/minus  = tau +- ip_plus
struct PhaseCoords {
  double g_plus = 0.0, g_minus = 0.0;
  double gp_plus = 0.0, gp_minus = 0.0;
  double i_plus = 0.0, i_minus = 0.0;
  double ip_plus = 0.0, ip_minus = 0.0;
  double h_plus = 0.0, h_minus = 0.0;
};

// Requires a T-symmetric game.
PhaseCoords phase_coords(const ClassicalGame& g, const Correlation& c);

// Alice's closed-form payoff from precomputed invariants and coordinates.
// Hot path for grid searches; callers wanting Bob's payoff pass the flipped
// arguments (beta~, alpha~) themselves.
double payoff_closed_form_alice(const GameInvariants& inv, const PhaseCoords& pc,
                                const LocalStrategy& alpha, const LocalStrategy& beta);

// (PiA, PiB) for a T-symmetric game, evaluated from the closed form
//   PiA = 1/4 { Tr A + tau ca cb + ip_plus ca + ip_minus cb
//               - i_plus sa sb sin(a2) cos(b2) - i_minus sa sb cos(a2) sin(b2) }
// with ca = cos(alpha1) etc.; PiB(alpha, beta) = PiA(beta~, alpha~) where ~ is
// the basis flip.
std::pair<double, double> payoff_closed_form(const ClassicalGame& g,
                                             const LocalStrategy& alpha,
                                             const LocalStrategy& beta,
                                             const Correlation& c);

// (PiA, PiB) by direct expectation in the correlated state J|alpha,beta>.
// Works for any game; serves as the reference implementation.
std::pair<double, double> payoff_operator_form(const ClassicalGame& g,
                                               const LocalStrategy& alpha,
                                               const LocalStrategy& beta,
                                               const Correlation& c);

// Dispatch on the declared symmetry: closed form for T, the exchange relation
// PiB(alpha,beta) = PiA(beta,alpha) for S, direct expectation otherwise.
std::pair<double, double> payoff_pair(const ClassicalGame& g,
                                      const LocalStrategy& alpha,
                                      const LocalStrategy& beta,
                                      const Correlation& c);

// Expected payoffs of the classical mixed game: x1 and y1 are the
// probabilities of the second strategy for Alice and Bob.
std::pair<double, double> payoff_classical_limit(const ClassicalGame& g, double x1, double y1);

// Split J^dagger A J into a diagonal pseudo-classical part
//   cos^2(g1/2) A + (cos^2(g2/2) - cos^2(g1/2)) SAS + sin^2(g2/2) CAC
// and the interference remainder
//   (i/2) sin(g1) [A,S] + (i/2) sin(g2) [A,T],
// returned in that order. Their sum reconstructs J^dagger A J.
std::pair<Operator4, Operator4> decompose_correlated_payoff(const ClassicalGame& g,
                                                            const Correlation& c);

}  // namespace qgame
