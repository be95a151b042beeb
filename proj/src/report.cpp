#include "qgame/report.hpp"

#include <cmath>
#include <sstream>

#include "qgame/emit.hpp"

namespace qgame {

namespace {

void require(bool ok, const char* name) {
  if (!ok) throw ConstraintViolation(std::string("constraint failed: ") + name);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string pair_str(const std::pair<double, double>& p) {
  return "(" + format_sig(p.first) + ", " + format_sig(p.second) + ")";
}

std::string gamma_str(const Correlation& c) {
  return "(" + format_sig(c.gamma1) + ", " + format_sig(c.gamma2) + ")";
}

std::string point_str(const PhasePoint& p) {
  return "(" + format_sig(p.gp_plus) + ", " + format_sig(p.gp_minus) + ")";
}

std::string matrix_str(const ClassicalGame& g) {
  return "a00=" + format_sig(g.a(0, 0)) + " a01=" + format_sig(g.a(0, 1)) +
         " a10=" + format_sig(g.a(1, 0)) + " a11=" + format_sig(g.a(1, 1));
}

std::string inv_str(const GameInvariants& inv) {
  return "trace=" + format_sig(inv.trace) + " tau=" + format_sig(inv.tau) +
         " sigma+=" + format_sig(inv.sigma_plus) + " sigma-=" + format_sig(inv.sigma_minus);
}

std::string class_str(const PhaseClass& cls) {
  std::string s = cls.tau_sign > 0 ? "tau>0, " : "tau<0, ";
  switch (cls.crossing) {
    case Crossing::Inside:
      return s + "Inside";
    case Crossing::CornersCut:
      return s + "CornersCut";
    case Crossing::EdgesCut:
      return s + (cls.orientation > 0 ? "EdgesCut (l_h > l_v)" : "EdgesCut (l_h < l_v)");
  }
  return s;
}

// Payoff pairs of all four edge outcomes, equilibria or not.
std::array<std::pair<double, double>, 4> edge_outcomes(const ClassicalGame& g,
                                                       const Correlation& c) {
  std::array<std::pair<double, double>, 4> out;
  for (int e = 0; e < 4; ++e)
    out[e] = payoff_pair(g, edge_alice(Edge(e)), edge_bob(Edge(e)), c);
  return out;
}

// True when the mask holds exactly one edge and no other edge outcome pays
// both players strictly more than it.
bool singleton_pareto(const ClassicalGame& g, const Correlation& c, unsigned mask, double eps) {
  if (mask == 0 || (mask & (mask - 1)) != 0) return false;
  int e = 0;
  while (!(mask & (1u << e))) ++e;
  const auto outcomes = edge_outcomes(g, c);
  for (int f = 0; f < 4; ++f) {
    if (f == e) continue;
    if (outcomes[f].first > outcomes[e].first + eps &&
        outcomes[f].second > outcomes[e].second + eps)
      return false;
  }
  return true;
}

// Nine payoff pairs over {|0>, |1>, non-edge} per player, and a brute-force
// pass over every equilibrium the table advertises.
PayoffTable payoff_table(const ClassicalGame& g, const Correlation& c, bool& verified) {
  const LocalStrategy zero(0.0, 0.0), one(kPi, 0.0);
  const std::optional<NonEdgeQne> ne = nonedge_qne(g, c);
  const std::array<LocalStrategy, 3> rows = {zero, one, ne ? ne->alpha : zero};
  const std::array<LocalStrategy, 3> cols = {zero, one, ne ? ne->beta : zero};
  PayoffTable t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = payoff_pair(g, rows[i], cols[j], c);

  const EdgeQneReport eq = edge_qne(g, c);
  for (int e = 0; e < 4; ++e)
    if (eq.present[e])
      verified = verified &&
                 verify_qne_bruteforce(g, c, edge_alice(Edge(e)), edge_bob(Edge(e))).confirmed;
  if (ne) verified = verified && verify_qne_bruteforce(g, c, ne->alpha, ne->beta).confirmed;
  return t;
}

}  // namespace

BosReport build_bos_report(const std::array<double, 4>& values, int resolution) {
  require(values[0] > values[3], "a00 > a11");
  require(values[3] > values[1], "a11 > a01");
  require(values[1] == values[2], "a01 = a10");
  const ClassicalGame game = ClassicalGame::t_symmetric(values);
  const GameInvariants inv = invariants(game);
  BosReport r{game, inv, rectangle(game), phase_class(game), resolution};

  bool edges_ok = true, confined = true, any_nonedge = false;
  for (const ScanRow& row : grid_scan(game, resolution)) {
    if (row.edge_mask != 0b1001u) edges_ok = false;
    if (row.nonedge) {
      if (!any_nonedge) {
        any_nonedge = true;
        r.nonedge_payoff = *row.nonedge_payoff;
      }
      if (std::abs(std::sin(row.gamma.gamma2)) > 1e-9) confined = false;
    }
  }
  r.edges_always_00_11 = edges_ok;
  r.nonedge_only_at_sin2_zero = any_nonedge && confined;
  r.coincidence_payoff = 0.5 * (game.a(0, 0) + game.a(1, 1));
  r.dilemma_resolved = !edges_ok;
  return r;
}

PdReport build_pd_report(const std::array<double, 4>& values, int resolution) {
  require(values[2] > values[0], "a10 > a00");
  require(values[0] > values[3], "a00 > a11");
  require(values[3] > values[1], "a11 > a01");
  require(2.0 * values[0] > values[1] + values[2], "2 a00 > a01 + a10");
  require(values[1] + values[2] > 2.0 * values[3], "a01 + a10 > 2 a11");
  const ClassicalGame input = ClassicalGame::s_symmetric(values);
  const ClassicalGame dual = dualize(input, DualityMap::Alice);
  const GameInvariants inv = invariants(dual);
  PdReport r{.input = input,
             .dual = dual,
             .inv = inv,
             .rect = rectangle(dual),
             .cls = phase_class(dual),
             .resolution = resolution};

  const double eps = 1e-9 * dual.scale();
  const std::vector<ScanRow> rows = grid_scan(dual, resolution);
  r.total_points = static_cast<int>(rows.size());
  for (const ScanRow& row : rows) {
    if (row.nonedge) ++r.nonedge_points;
    if (singleton_pareto(dual, row.gamma, row.edge_mask, eps)) {
      ++r.dilemma_free_points;
      if (!r.example_free) r.example_free = row.gamma;
    }
  }
  r.classical_has_mixed = classical_mixed_ne(dual).has_value();
  r.dilemma_resolved = r.dilemma_free_points > 0 && r.nonedge_points == 0;
  return r;
}

ShReport build_sh_report(const std::array<double, 4>& values, int resolution) {
  require(values[0] > values[2], "a00 > a10");
  require(values[2] >= values[3], "a10 >= a11");
  require(values[3] > values[1], "a11 > a01");
  const ClassicalGame input = ClassicalGame::s_symmetric(values);
  const ClassicalGame dual = dualize(input, DualityMap::Alice);
  const GameInvariants inv = invariants(dual);
  ShReport r{.input = input,
             .dual = dual,
             .inv = inv,
             .rect = rectangle(dual),
             .cls = phase_class(dual)};
  r.risk_dominant_second = values[2] + values[3] > values[0] + values[1];
  r.resolution = resolution;

  const std::vector<ScanRow> rows = grid_scan(dual, resolution);
  r.total_points = static_cast<int>(rows.size());
  for (const ScanRow& row : rows) {
    if (row.nonedge) ++r.nonedge_points;
    if (row.domain.kind == DomainKind::NoDilemmaSingle ||
        row.domain.kind == DomainKind::NoDilemmaPair) {
      ++r.dilemma_free_points;
      if (!r.example_free) r.example_free = row.gamma;
    }
  }

  const double half = 0.5 / inv.tau;
  const double u = inv.tau * inv.tau + inv.sigma_plus * inv.sigma_minus;
  const double v = inv.tau * inv.tau - inv.sigma_plus * inv.sigma_minus;
  r.contact_points = {PhasePoint{-half * u, -half * v}, PhasePoint{half * u, half * v}};

  r.cl_gamma = Correlation(0.0, 0.0);
  r.me_gamma = Correlation(0.5 * kPi, 0.0);
  r.cl_point = to_phase_point(dual, r.cl_gamma);
  r.me_point = to_phase_point(dual, r.me_gamma);
  bool verified = true;
  r.cl_table = payoff_table(dual, r.cl_gamma, verified);
  r.me_table = payoff_table(dual, r.me_gamma, verified);
  r.tables_verified = verified;
  return r;
}

namespace {

void append_table(std::ostringstream& out, const char* name, const PayoffTable& t) {
  out << "  " << name << " (rows Alice |0>, |1>, ne; cols Bob |0>, |1>, ne):\n";
  for (int i = 0; i < 3; ++i) {
    out << "   ";
    for (int j = 0; j < 3; ++j) out << " " << pair_str(t[i][j]);
    out << "\n";
  }
}

}  // namespace

std::string render_report(const BosReport& r) {
  std::ostringstream out;
  out << "battle of the sexes\n";
  out << "  input (T-symmetric): " << matrix_str(r.game) << "\n";
  out << "  invariants: " << inv_str(r.inv) << "\n";
  out << "  rectangle: " << format_sig(r.rect.l_h) << " x " << format_sig(r.rect.l_v)
      << (r.rect.l_v == 0.0 ? " (segment on the gp_plus axis)" : "") << "\n";
  out << "  phase class: " << class_str(r.cls) << "\n";
  out << "  scan " << r.resolution << "x" << r.resolution << ":\n";
  out << "    edge QNE set {|00>, |11>} everywhere: " << yn(r.edges_always_00_11) << "\n";
  out << "    non-edge branch only at gamma2 in {0, pi}: " << yn(r.nonedge_only_at_sin2_zero)
      << "\n";
  out << "    non-edge payoff: " << format_sig(r.nonedge_payoff) << " (a11 = "
      << format_sig(r.game.a(1, 1)) << ")\n";
  out << "    edge payoffs coincide at gamma2 = pi/2: " << format_sig(r.coincidence_payoff)
      << "\n";
  out << "  verdict: "
      << (r.dilemma_resolved ? "an edge equilibrium disappears for some correlation"
                             : "dilemma unresolved for every scanned correlation")
      << "\n";
  return out.str();
}

std::string render_report(const PdReport& r) {
  std::ostringstream out;
  out << "prisoner's dilemma\n";
  out << "  input (S-symmetric): " << matrix_str(r.input) << "\n";
  out << "  dual (T-symmetric): " << matrix_str(r.dual) << "\n";
  out << "  invariants: " << inv_str(r.inv) << "\n";
  out << "  rectangle: " << format_sig(r.rect.l_h) << " x " << format_sig(r.rect.l_v) << "\n";
  out << "  phase class: " << class_str(r.cls) << "\n";
  out << "  scan " << r.resolution << "x" << r.resolution << ": dilemma-free points "
      << r.dilemma_free_points << "/" << r.total_points << ", non-edge points "
      << r.nonedge_points << "/" << r.total_points << "\n";
  if (r.example_free) out << "  example dilemma-free gamma: " << gamma_str(*r.example_free) << "\n";
  out << "  classical mixed NE: " << (r.classical_has_mixed ? "present" : "absent") << "\n";
  out << "  verdict: ";
  if (r.dilemma_resolved)
    out << "dilemma-free correlations exist; no non-edge QNE anywhere\n";
  else if (r.dilemma_free_points > 0)
    out << "dilemma-free correlations exist, but a non-edge QNE interferes\n";
  else
    out << "no dilemma-free correlation found\n";
  return out.str();
}

std::string render_report(const ShReport& r) {
  std::ostringstream out;
  out << "stag hunt\n";
  out << "  input (S-symmetric): " << matrix_str(r.input) << "\n";
  out << "  risk-dominant strategy: " << (r.risk_dominant_second ? "|1>" : "|0>") << "\n";
  out << "  dual (T-symmetric): " << matrix_str(r.dual) << "\n";
  out << "  invariants: " << inv_str(r.inv) << "\n";
  out << "  rectangle: " << format_sig(r.rect.l_h) << " x " << format_sig(r.rect.l_v) << "\n";
  out << "  phase class: " << class_str(r.cls) << "\n";
  out << "  contact points: " << point_str(r.contact_points[0]) << ", "
      << point_str(r.contact_points[1]) << "\n";
  out << "  scan " << r.resolution << "x" << r.resolution << ": dilemma-free points "
      << r.dilemma_free_points << "/" << r.total_points << ", non-edge points "
      << r.nonedge_points << "/" << r.total_points << "\n";
  if (r.example_free) out << "  example dilemma-free gamma: " << gamma_str(*r.example_free) << "\n";
  out << "  classical limit gamma = " << gamma_str(r.cl_gamma) << ", point "
      << point_str(r.cl_point) << "\n";
  append_table(out, "cl table", r.cl_table);
  out << "  maximal entanglement gamma = " << gamma_str(r.me_gamma) << ", point "
      << point_str(r.me_point) << "\n";
  append_table(out, "me table", r.me_table);
  out << "  equilibria brute-force verified: " << yn(r.tables_verified) << "\n";
  return out.str();
}

}  // namespace qgame
