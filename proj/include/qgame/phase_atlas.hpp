// Classification of correlations in the (gp_plus, gp_minus) plane: the
// reachable rectangle, dilemma domains, the h = 0 crossing pattern of a game,
// the non-edge existence region, and the full grid scan.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgame/equilibrium.hpp"

namespace qgame {

struct PhasePoint {
  double gp_plus = 0.0;
  double gp_minus = 0.0;
};

// Correlations reach the axis-aligned rectangle [-l_h/2, l_h/2] x
// [-l_v/2, l_v/2] with l_h = 2|a00 - a11|, l_v = 2|a01 - a10|.
struct Rectangle {
  double l_h = 0.0;
  double l_v = 0.0;
};

enum class DomainKind {
  BoS,              // both diagonal edges equilibria, opposed preferences
  PD,               // single edge equilibrium dominated by its mirror
  SH,               // two edge equilibria, payoff and risk dominance split
  NoDilemmaSingle,  // single edge equilibrium, already Pareto-preferred
  NoDilemmaPair,    // two edge equilibria, one dominates in both senses
  Boundary,         // a deciding quantity sits inside the epsilon band
  Degenerate,       // tau = 0 or the rectangle collapses to a point
};

struct DomainLabel {
  DomainKind kind = DomainKind::Degenerate;
  std::optional<Edge> edge;  // the relevant edge for Single/Pair labels
};

std::string to_string(const DomainLabel& label);

enum class Crossing { Inside, CornersCut, EdgesCut };

// How the lines h_plus = 0 and h_minus = 0 meet the rectangle, together with
// the sign of tau. orientation = sign(l_h - l_v), meaningful for EdgesCut
// only (zero otherwise). Eight classes in total.
struct PhaseClass {
  int tau_sign = 0;
  Crossing crossing = Crossing::Inside;
  int orientation = 0;
};

enum class RegionStatus { Allowed, Excluded, Boundary };

PhasePoint to_phase_point(const ClassicalGame& g, const Correlation& c);

// Label one plane point from the scalar invariants. Depends on the game only
// through tau and sigma degeneracy, so it can paint the whole plane.
DomainLabel classify_point(const GameInvariants& inv, const PhasePoint& p);

Rectangle rectangle(const ClassicalGame& g);

// Throws TauZero for tau = 0.
//   Inside:     (l_h + l_v)/2 < |tau|
//   CornersCut: |l_h - l_v|/2 <= |tau| <= (l_h + l_v)/2
//   EdgesCut:   |tau| < |l_h - l_v|/2
// Exact corner contact counts as CornersCut.
PhaseClass phase_class(const ClassicalGame& g);

// Existence test for the non-edge branch at a plane point:
//   delta^2 = gp_plus^2 - gp_minus^2 - sigma_plus*sigma_minus >= 0
//   (h_plus + delta)(h_minus + delta) >= 0
// Excluded when either fails with margin; Boundary when the second sits in
// the band (the first is a closed condition, its zero set still carries
// solutions and stays Allowed).
RegionStatus nonedge_region(const ClassicalGame& g, const PhasePoint& p);

struct ScanRow {
  Correlation gamma;
  PhasePoint point;
  double h_plus = 0.0;
  double h_minus = 0.0;
  DomainLabel domain;
  unsigned edge_mask = 0;
  bool nonedge = false;
  std::optional<double> nonedge_payoff;
};

// Uniform resolution x resolution grid over [0, 2*pi)^2, gamma1 in the outer
// loop, row-major. resolution >= 2.
std::vector<ScanRow> grid_scan(const ClassicalGame& g, int resolution);

}  // namespace qgame
