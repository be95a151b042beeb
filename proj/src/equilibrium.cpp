#include "qgame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qgame {

namespace {

void require_t_symmetric(const ClassicalGame& g, const char* op) {
  if (g.symmetry() != Symmetry::T)
    throw std::invalid_argument(std::string(op) +
                                ": requires a T-symmetric game (convert via dualize first)");
}

double edge_band(const GameInvariants& inv, const PhaseCoords& pc) {
  return 1e-9 * std::max({1.0, std::abs(inv.tau), std::abs(pc.ip_plus)});
}

}  // namespace

LocalStrategy edge_alice(Edge e) { return LocalStrategy((e >> 1) ? kPi : 0.0, 0.0); }

LocalStrategy edge_bob(Edge e) { return LocalStrategy((e & 1) ? kPi : 0.0, 0.0); }

Edge twist_partner(Edge e) {
  // |ij> -> |j~,i~>: bit reverse and complement
  static constexpr Edge map[4] = {kEdge11, kEdge01, kEdge10, kEdge00};
  return map[e];
}

unsigned EdgeQneReport::mask() const {
  unsigned m = 0;
  for (int e = 0; e < 4; ++e)
    if (present[e]) m |= 1u << e;
  return m;
}

EdgeQneReport edge_qne(const ClassicalGame& g, const Correlation& c) {
  require_t_symmetric(g, "edge_qne");
  const GameInvariants inv = invariants(g);
  const PhaseCoords pc = phase_coords(g, c);
  const double eps = edge_band(inv, pc);
  const double hp = pc.h_plus, hm = pc.h_minus;

  EdgeQneReport r;
  r.present[kEdge00] = hp > eps && hm > eps;
  r.present[kEdge11] = r.present[kEdge00];
  r.present[kEdge01] = hm < -eps;
  r.present[kEdge10] = hp < -eps;

  const bool diag_boundary = !r.present[kEdge00] && hp >= -eps && hm >= -eps;
  r.boundary[kEdge00] = diag_boundary;
  r.boundary[kEdge11] = diag_boundary;
  r.boundary[kEdge01] = std::abs(hm) <= eps;
  r.boundary[kEdge10] = std::abs(hp) <= eps;

  const double pi_edge[4] = {
      0.25 * (inv.trace + inv.tau + 2.0 * pc.gp_plus),  // |00>
      0.25 * (inv.trace - inv.tau + 2.0 * pc.gp_minus), // |01>
      0.25 * (inv.trace - inv.tau - 2.0 * pc.gp_minus), // |10>
      0.25 * (inv.trace + inv.tau - 2.0 * pc.gp_plus),  // |11>
  };
  for (int e = 0; e < 4; ++e)
    if (r.present[e] || r.boundary[e])
      r.payoffs[e] = std::make_pair(pi_edge[e], pi_edge[twist_partner(Edge(e))]);
  return r;
}

double edge_payoff_interpolation(const ClassicalGame& g, Edge e, const Correlation& c) {
  const int i = e >> 1, j = e & 1;
  const double angle = (i == j) ? c.gamma2 : c.gamma1;
  const double cw = std::cos(angle / 2.0), sw = std::sin(angle / 2.0);
  return cw * cw * g.a(i, j) + sw * sw * g.a(1 - i, 1 - j);
}

NonEdgeSearch nonedge_qne_search(const ClassicalGame& g, const Correlation& c) {
  require_t_symmetric(g, "nonedge_qne_search");
  const GameInvariants inv = invariants(g);
  const PhaseCoords pc = phase_coords(g, c);
  const double s = g.scale();
  const double eps_g = 1e-12 * s;        // treat a g value this small as zero
  const double eps_d = 1e-13 * s * s;    // band for the delta^2 >= 0 gate
  const double eps_den = 1e-12 * s;

  NonEdgeSearch out;

  double alpha2 = 0.0;
  double delta = 0.0;
  if (std::abs(pc.g_minus) <= eps_g) {
    if (std::abs(pc.g_plus) > eps_g) {
      // cos(2 alpha2) would need to be g_plus / 0: no root.
      out.status = NonEdgeStatus::DegenerateBranch;
      return out;
    }
    // Both sine terms vanish; the phase is unconstrained. Take the canonical
    // representative with sin(2 alpha2) = 0.
  } else {
    const double d2 = (pc.g_minus - pc.g_plus) * (pc.g_minus + pc.g_plus);
    if (d2 < -eps_d) {
      out.status = NonEdgeStatus::NoSolution;
      return out;
    }
    delta = std::sqrt(std::max(0.0, d2));
    // cos(2a2) = -g_plus/g_minus with the sign of sin(2a2) fixed so that
    // g_minus sin(2a2) = -delta <= 0 (the second-order condition).
    const double t = pc.g_minus > 0.0 ? 1.0 : -1.0;
    alpha2 = wrap_angle(0.5 * std::atan2(-delta * t, -pc.g_plus * t));
  }

  const double den = inv.tau + delta;
  if (std::abs(den) <= eps_den) {
    out.status = NonEdgeStatus::NoSolution;
    return out;
  }
  const double ratio = pc.ip_plus / den;
  if (ratio * ratio > 1.0 + 1e-11) {
    out.status = NonEdgeStatus::NoSolution;
    return out;
  }

  NonEdgeQne qne;
  qne.alpha = LocalStrategy(std::acos(std::min(std::max(ratio, -1.0), 1.0)), alpha2);
  qne.beta = qne.alpha.basis_flipped();
  qne.delta = delta;
  qne.payoff = 0.25 * (inv.trace + (inv.tau * delta - inv.sigma_plus * inv.sigma_minus) / den);
  out.status = NonEdgeStatus::Found;
  out.qne = qne;
  return out;
}

std::optional<NonEdgeQne> nonedge_qne(const ClassicalGame& g, const Correlation& c) {
  return nonedge_qne_search(g, c).qne;
}

std::optional<MixedNe> classical_mixed_ne(const ClassicalGame& g) {
  require_t_symmetric(g, "classical_mixed_ne");
  const GameInvariants inv = invariants(g);
  if (std::abs(inv.tau) <= 1e-12 * g.scale())
    throw TauZero("classical_mixed_ne: tau = 0");
  if (std::abs(inv.sigma_plus) > std::abs(inv.tau)) return std::nullopt;
  MixedNe ne;
  ne.prob = 0.5 * (1.0 + inv.sigma_plus / inv.tau);
  ne.payoff = (g.a(0, 0) * g.a(1, 1) - g.a(0, 1) * g.a(1, 0)) / inv.tau;
  return ne;
}

namespace {

// Single-player payoff evaluator with the per-game setup hoisted out of the
// deviation loops.
class PayoffEval {
 public:
  PayoffEval(const ClassicalGame& g, const Correlation& c) : g_(g) {
    if (g.symmetry() == Symmetry::T) {
      closed_ = true;
      inv_ = invariants(g);
      pc_ = phase_coords(g, c);
    } else {
      ops_ = quantize(g);
      j_ = correlation_unitary(c);
    }
  }

  double alice(const LocalStrategy& a, const LocalStrategy& b) const {
    if (closed_) return payoff_closed_form_alice(inv_, pc_, a, b);
    return expectation(j_.apply(product_state(a, b)), ops_.op_a);
  }

  double bob(const LocalStrategy& a, const LocalStrategy& b) const {
    if (closed_) return payoff_closed_form_alice(inv_, pc_, b.basis_flipped(), a.basis_flipped());
    if (g_.symmetry() == Symmetry::S)
      return expectation(j_.apply(product_state(b, a)), ops_.op_a);
    return expectation(j_.apply(product_state(a, b)), ops_.op_b);
  }

 private:
  const ClassicalGame& g_;
  bool closed_ = false;
  GameInvariants inv_;
  PhaseCoords pc_;
  PayoffOperatorPair ops_;
  Operator4 j_;
};

struct BestDeviation {
  double improvement = -std::numeric_limits<double>::infinity();
  LocalStrategy at;
};

// Scan one player's unilateral deviations over the grid, then refine 3x
// around the best grid point. Strict comparisons keep the first (lowest
// index) maximizer, so the result is deterministic.
BestDeviation scan_player(const PayoffEval& eval, Player who, const LocalStrategy& alpha,
                          const LocalStrategy& beta, double base, int n) {
  const double dtheta = kPi / (n - 1);
  const double dphi = kTwoPi / n;
  BestDeviation best;
  auto value = [&](const LocalStrategy& dev) {
    return who == Player::Alice ? eval.alice(dev, beta) : eval.bob(alpha, dev);
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const LocalStrategy dev(i * dtheta, j * dphi);
      const double imp = value(dev) - base;
      if (imp > best.improvement) best = {imp, dev};
    }
  const LocalStrategy center = best.at;
  for (int i = -3; i <= 3; ++i)
    for (int j = -3; j <= 3; ++j) {
      const double theta = std::min(std::max(center.theta + i * dtheta / 3.0, 0.0), kPi);
      const LocalStrategy dev(theta, center.phi + j * dphi / 3.0);
      const double imp = value(dev) - base;
      if (imp > best.improvement) best = {imp, dev};
    }
  return best;
}

}  // namespace

VerifyResult verify_qne_bruteforce(const ClassicalGame& g, const Correlation& c,
                                   const LocalStrategy& alpha, const LocalStrategy& beta,
                                   int grid_n, double tol) {
  if (grid_n < 8) throw std::invalid_argument("verify_qne_bruteforce: grid_n < 8");
  const PayoffEval eval(g, c);
  const double base_a = eval.alice(alpha, beta);
  const BestDeviation dev_a = scan_player(eval, Player::Alice, alpha, beta, base_a, grid_n);
  if (dev_a.improvement > tol)
    return {false, DeviationWitness{Player::Alice, dev_a.at, dev_a.improvement}};
  const double base_b = eval.bob(alpha, beta);
  const BestDeviation dev_b = scan_player(eval, Player::Bob, alpha, beta, base_b, grid_n);
  if (dev_b.improvement > tol)
    return {false, DeviationWitness{Player::Bob, dev_b.at, dev_b.improvement}};
  return {true, std::nullopt};
}

namespace {

// Stationarity residuals of Alice's payoff in (alpha1, alpha2) at fixed beta.
std::pair<double, double> alice_gradient(const GameInvariants& inv, const PhaseCoords& pc,
                                         const LocalStrategy& alpha, const LocalStrategy& beta) {
  const double ca = std::cos(alpha.theta), sa = std::sin(alpha.theta);
  const double cb = std::cos(beta.theta), sb = std::sin(beta.theta);
  const double sa2 = std::sin(alpha.phi), ca2 = std::cos(alpha.phi);
  const double sb2 = std::sin(beta.phi), cb2 = std::cos(beta.phi);
  const double d1 = 0.25 * (-inv.tau * sa * cb - pc.ip_plus * sa -
                            pc.i_plus * ca * sb * sa2 * cb2 - pc.i_minus * ca * sb * ca2 * sb2);
  const double d2 = 0.25 * sa * sb * (-pc.i_plus * ca2 * cb2 + pc.i_minus * sa2 * sb2);
  return {d1, d2};
}

}  // namespace

double qne_first_order_residual(const ClassicalGame& g, const LocalStrategy& alpha,
                                const LocalStrategy& beta, const Correlation& c) {
  require_t_symmetric(g, "qne_first_order_residual");
  const GameInvariants inv = invariants(g);
  const PhaseCoords pc = phase_coords(g, c);
  const auto [a1, a2] = alice_gradient(inv, pc, alpha, beta);
  // PiB(alpha, beta) = PiA(beta~, alpha~), and the flip negates both angle
  // derivatives, which leaves the absolute residuals unchanged.
  const auto [b1, b2] = alice_gradient(inv, pc, beta.basis_flipped(), alpha.basis_flipped());
  return std::max({std::abs(a1), std::abs(a2), std::abs(b1), std::abs(b2)});
}

std::vector<InteriorCandidate> interior_stationary_candidates(const ClassicalGame& g,
                                                              const Correlation& c, int grid_n,
                                                              int k) {
  require_t_symmetric(g, "interior_stationary_candidates");
  if (grid_n < 4) throw std::invalid_argument("interior_stationary_candidates: grid_n < 4");
  const GameInvariants inv = invariants(g);
  const PhaseCoords pc = phase_coords(g, c);

  std::vector<InteriorCandidate> best;
  auto consider = [&](const InteriorCandidate& cand) {
    if ((int)best.size() < k) {
      best.push_back(cand);
      std::sort(best.begin(), best.end(),
                [](const auto& x, const auto& y) { return x.residual < y.residual; });
      return;
    }
    if (cand.residual < best.back().residual) {
      best.back() = cand;
      std::sort(best.begin(), best.end(),
                [](const auto& x, const auto& y) { return x.residual < y.residual; });
    }
  };

  for (int ia = 0; ia < grid_n; ++ia)
    for (int ja = 0; ja < grid_n; ++ja)
      for (int ib = 0; ib < grid_n; ++ib)
        for (int jb = 0; jb < grid_n; ++jb) {
          const LocalStrategy a((ia + 1) * kPi / (grid_n + 1), ja * kTwoPi / grid_n);
          const LocalStrategy b((ib + 1) * kPi / (grid_n + 1), jb * kTwoPi / grid_n);
          const auto [ga1, ga2] = alice_gradient(inv, pc, a, b);
          const auto [gb1, gb2] =
              alice_gradient(inv, pc, b.basis_flipped(), a.basis_flipped());
          const double res = std::max({std::abs(ga1), std::abs(ga2), std::abs(gb1), std::abs(gb2)});
          consider({a, b, res});
        }
  return best;
}

}  // namespace qgame
