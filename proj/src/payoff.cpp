#include "qgame/payoff.hpp"

#include <cmath>

namespace qgame {

namespace {

void require_t_symmetric(const ClassicalGame& g, const char* op) {
  if (g.symmetry() != Symmetry::T)
    throw std::invalid_argument(std::string(op) +
                                ": requires a T-symmetric game (convert via dualize first)");
}

}  // namespace

double payoff_closed_form_alice(const GameInvariants& inv, const PhaseCoords& pc,
                                const LocalStrategy& alpha, const LocalStrategy& beta) {
  const double ca = std::cos(alpha.theta), sa = std::sin(alpha.theta);
  const double cb = std::cos(beta.theta), sb = std::sin(beta.theta);
  return 0.25 * (inv.trace + inv.tau * ca * cb + pc.ip_plus * ca + pc.ip_minus * cb -
                 pc.i_plus * sa * sb * std::sin(alpha.phi) * std::cos(beta.phi) -
                 pc.i_minus * sa * sb * std::cos(alpha.phi) * std::sin(beta.phi));
}

PhaseCoords phase_coords(const ClassicalGame& g, const Correlation& c) {
  require_t_symmetric(g, "phase_coords");
  const GameInvariants inv = invariants(g);
  const double dh = g.a(0, 0) - g.a(1, 1);
  const double dv = g.a(0, 1) - g.a(1, 0);
  PhaseCoords pc;
  pc.g_plus = dh * std::sin(c.gamma2);
  pc.gp_plus = dh * std::cos(c.gamma2);
  pc.g_minus = dv * std::sin(c.gamma1);
  pc.gp_minus = dv * std::cos(c.gamma1);
  pc.i_plus = pc.g_plus + pc.g_minus;
  pc.i_minus = pc.g_plus - pc.g_minus;
  pc.ip_plus = pc.gp_plus + pc.gp_minus;
  pc.ip_minus = pc.gp_plus - pc.gp_minus;
  pc.h_plus = inv.tau + pc.ip_plus;
  pc.h_minus = inv.tau - pc.ip_plus;
  return pc;
}

std::pair<double, double> payoff_closed_form(const ClassicalGame& g, const LocalStrategy& alpha,
                                             const LocalStrategy& beta, const Correlation& c) {
  require_t_symmetric(g, "payoff_closed_form");
  const GameInvariants inv = invariants(g);
  const PhaseCoords pc = phase_coords(g, c);
  const double pi_a = payoff_closed_form_alice(inv, pc, alpha, beta);
  // Twisting the joint state maps Bob's problem onto Alice's.
  const double pi_b =
      payoff_closed_form_alice(inv, pc, beta.basis_flipped(), alpha.basis_flipped());
  return {pi_a, pi_b};
}

std::pair<double, double> payoff_operator_form(const ClassicalGame& g, const LocalStrategy& alpha,
                                               const LocalStrategy& beta, const Correlation& c) {
  const PayoffOperatorPair ops = quantize(g);
  const JointState state = correlation_unitary(c).apply(product_state(alpha, beta));
  return {expectation(state, ops.op_a), expectation(state, ops.op_b)};
}

std::pair<double, double> payoff_pair(const ClassicalGame& g, const LocalStrategy& alpha,
                                      const LocalStrategy& beta, const Correlation& c) {
  switch (g.symmetry()) {
    case Symmetry::T:
      return payoff_closed_form(g, alpha, beta, c);
    case Symmetry::S: {
      const PayoffOperatorPair ops = quantize(g);
      const Operator4 j = correlation_unitary(c);
      const double pi_a = expectation(j.apply(product_state(alpha, beta)), ops.op_a);
      // exchange symmetry: PiB(alpha, beta) = PiA(beta, alpha)
      const double pi_b = expectation(j.apply(product_state(beta, alpha)), ops.op_a);
      return {pi_a, pi_b};
    }
    case Symmetry::Explicit:
    default:
      return payoff_operator_form(g, alpha, beta, c);
  }
}

std::pair<double, double> payoff_classical_limit(const ClassicalGame& g, double x1, double y1) {
  const double slack = 1e-12;
  if (x1 < -slack || x1 > 1.0 + slack || y1 < -slack || y1 > 1.0 + slack)
    throw std::invalid_argument("payoff_classical_limit: probabilities outside [0, 1]");
  x1 = std::min(std::max(x1, 0.0), 1.0);
  y1 = std::min(std::max(y1, 0.0), 1.0);
  const double x[2] = {1.0 - x1, x1};
  const double y[2] = {1.0 - y1, y1};
  double pi_a = 0.0, pi_b = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      pi_a += x[i] * g.a(i, j) * y[j];
      pi_b += x[i] * g.b(i, j) * y[j];
    }
  return {pi_a, pi_b};
}

std::pair<Operator4, Operator4> decompose_correlated_payoff(const ClassicalGame& g,
                                                            const Correlation& c) {
  const Operator4 a = quantize(g).op_a;
  const Operator4 s = swap_op();
  const Operator4 t = twist_op();
  const Operator4 cf = conversion_ops().full;
  const double c1 = std::cos(c.gamma1 / 2.0), c2 = std::cos(c.gamma2 / 2.0);

  const Operator4 pseudo_classical = a.scaled(Complex(c1 * c1, 0.0)) +
                                     (s * a * s).scaled(Complex(c2 * c2 - c1 * c1, 0.0)) +
                                     (cf * a * cf).scaled(Complex(1.0 - c2 * c2, 0.0));
  const Operator4 interference =
      (a * s - s * a).scaled(Complex(0.0, 0.5 * std::sin(c.gamma1))) +
      (a * t - t * a).scaled(Complex(0.0, 0.5 * std::sin(c.gamma2)));
  return {pseudo_classical, interference};
}

}  // namespace qgame
