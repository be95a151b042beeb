#include "qgame/phase_atlas.hpp"

#include <algorithm>
#include <cmath>

namespace qgame {

namespace {

void require_t_symmetric(const ClassicalGame& g, const char* op) {
  if (g.symmetry() != Symmetry::T)
    throw std::invalid_argument(std::string(op) +
                                ": requires a T-symmetric game (convert via dualize first)");
}

}  // namespace

std::string to_string(const DomainLabel& label) {
  const bool at10 = label.edge && *label.edge == kEdge10;
  switch (label.kind) {
    case DomainKind::BoS:
      return "BoS";
    case DomainKind::PD:
      return "PD";
    case DomainKind::SH:
      return "SH";
    case DomainKind::NoDilemmaSingle:
      return at10 ? "Single10" : "Single01";
    case DomainKind::NoDilemmaPair:
      return at10 ? "Pair10" : "Pair01";
    case DomainKind::Boundary:
      return "Boundary";
    case DomainKind::Degenerate:
      break;
  }
  return "Degenerate";
}

PhasePoint to_phase_point(const ClassicalGame& g, const Correlation& c) {
  require_t_symmetric(g, "to_phase_point");
  const PhaseCoords pc = phase_coords(g, c);
  return {pc.gp_plus, pc.gp_minus};
}

DomainLabel classify_point(const GameInvariants& inv, const PhasePoint& p) {
  // The label depends only on (tau, sigma_plus, sigma_minus, p), so the scale
  // for the epsilon band is built from exactly those.
  const double s = std::max({1.0, std::abs(inv.tau), std::abs(inv.sigma_plus),
                             std::abs(inv.sigma_minus), std::abs(p.gp_plus),
                             std::abs(p.gp_minus)});
  const double eps = 1e-9 * s;
  if (std::abs(inv.tau) <= 1e-12 * s) return {DomainKind::Degenerate, std::nullopt};
  if (std::abs(inv.sigma_plus) <= eps && std::abs(inv.sigma_minus) <= eps)
    return {DomainKind::Degenerate, std::nullopt};  // rectangle collapsed to a point

  const double ip = p.gp_plus + p.gp_minus;
  const double hp = inv.tau + ip;
  const double hm = inv.tau - ip;
  if (std::abs(hp) <= eps || std::abs(hm) <= eps) return {DomainKind::Boundary, std::nullopt};

  if (hp > 0.0 && hm > 0.0) return {DomainKind::BoS, std::nullopt};

  if (hp > 0.0 || hm > 0.0) {
    // Exactly one anti-diagonal edge is an equilibrium. It is dominated by
    // its mirror (the dilemma) when the mirror pays both players more.
    const Edge e = hm < 0.0 ? kEdge01 : kEdge10;
    const double toward_mirror = e == kEdge01 ? -p.gp_minus : p.gp_minus;
    if (toward_mirror > eps) return {DomainKind::PD, e};
    if (toward_mirror < -eps) return {DomainKind::NoDilemmaSingle, e};
    return {DomainKind::Boundary, std::nullopt};
  }

  // Both |01> and |10> are equilibria. Payoff dominance follows sign(gp_minus),
  // risk dominance follows sign(gp_plus + gp_minus); a stag hunt is the case
  // where they disagree.
  if (std::abs(p.gp_minus) <= eps || std::abs(ip) <= eps)
    return {DomainKind::Boundary, std::nullopt};
  if (p.gp_minus * ip < 0.0) return {DomainKind::SH, std::nullopt};
  return {DomainKind::NoDilemmaPair, p.gp_minus > 0.0 ? kEdge01 : kEdge10};
}

Rectangle rectangle(const ClassicalGame& g) {
  return {2.0 * std::abs(g.a(0, 0) - g.a(1, 1)), 2.0 * std::abs(g.a(0, 1) - g.a(1, 0))};
}

PhaseClass phase_class(const ClassicalGame& g) {
  const GameInvariants inv = invariants(g);
  if (std::abs(inv.tau) <= 1e-12 * g.scale()) throw TauZero("phase_class: tau = 0");
  const Rectangle r = rectangle(g);
  const double at = std::abs(inv.tau);
  PhaseClass cls;
  cls.tau_sign = inv.tau > 0.0 ? 1 : -1;
  // Ties go to the contact class: a rectangle whose corners sit exactly on
  // the lines counts as cut at the corners, not as inside.
  if (0.5 * (r.l_h + r.l_v) < at) {
    cls.crossing = Crossing::Inside;
  } else if (0.5 * std::abs(r.l_h - r.l_v) <= at) {
    cls.crossing = Crossing::CornersCut;
  } else {
    cls.crossing = Crossing::EdgesCut;
    cls.orientation = r.l_h > r.l_v ? 1 : -1;
  }
  return cls;
}

RegionStatus nonedge_region(const ClassicalGame& g, const PhasePoint& p) {
  require_t_symmetric(g, "nonedge_region");
  const GameInvariants inv = invariants(g);
  const double s = g.scale();

  const double d1 = (p.gp_plus - p.gp_minus) * (p.gp_plus + p.gp_minus) -
                    inv.sigma_plus * inv.sigma_minus;
  if (d1 < -1e-13 * s * s) return RegionStatus::Excluded;
  const double delta = std::sqrt(std::max(0.0, d1));

  const double ip = p.gp_plus + p.gp_minus;
  const double d2 = (inv.tau + ip + delta) * (inv.tau - ip + delta);
  const double eps = 1e-9 * s * s;
  if (d2 < -eps) return RegionStatus::Excluded;
  if (d2 <= eps) return RegionStatus::Boundary;
  return RegionStatus::Allowed;
}

std::vector<ScanRow> grid_scan(const ClassicalGame& g, int resolution) {
  require_t_symmetric(g, "grid_scan");
  if (resolution < 2) throw std::invalid_argument("grid_scan: resolution < 2");
  const GameInvariants inv = invariants(g);

  std::vector<ScanRow> rows;
  rows.reserve(static_cast<size_t>(resolution) * resolution);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j) {
      const Correlation c(kTwoPi * i / resolution, kTwoPi * j / resolution);
      const PhaseCoords pc = phase_coords(g, c);
      ScanRow row;
      row.gamma = c;
      row.point = {pc.gp_plus, pc.gp_minus};
      row.h_plus = pc.h_plus;
      row.h_minus = pc.h_minus;
      row.domain = classify_point(inv, row.point);
      row.edge_mask = edge_qne(g, c).mask();
      const NonEdgeSearch search = nonedge_qne_search(g, c);
      if (search.status == NonEdgeStatus::Found) {
        row.nonedge = true;
        row.nonedge_payoff = search.qne->payoff;
      }
      rows.push_back(row);
    }
  return rows;
}

}  // namespace qgame
