// Canned analyses of the three classic dilemmas, as structured data plus a
// plain-text renderer. PD and SH enter as S-symmetric games and are analyzed
// on their T-symmetric conversion; BoS is T-symmetric as given.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "qgame/phase_atlas.hpp"

namespace qgame {

struct ConstraintViolation : std::runtime_error {
  explicit ConstraintViolation(const std::string& what) : std::runtime_error(what) {}
};

// (PiA, PiB) at the nine combinations of {|0>, |1>, non-edge branch} per
// player; rows Alice, columns Bob, in that order.
using PayoffTable = std::array<std::array<std::pair<double, double>, 3>, 3>;

struct BosReport {
  ClassicalGame game;  // T-symmetric input
  GameInvariants inv;
  Rectangle rect;
  PhaseClass cls;
  int resolution = 0;
  bool edges_always_00_11 = false;   // every scanned gamma has exactly {|00>,|11>}
  bool nonedge_only_at_sin2_zero = false;  // non-edge branch confined to gamma2 in {0, pi}
  double nonedge_payoff = 0.0;             // common to that family, below a11
  double coincidence_payoff = 0.0;         // edge payoffs at gamma2 = pi/2: (a00+a11)/2
  bool dilemma_resolved = false;           // stays false: both edges persist everywhere
};

struct PdReport {
  ClassicalGame input;  // S-symmetric
  ClassicalGame dual;   // T-symmetric conversion actually analyzed
  GameInvariants inv;   // of the dual
  Rectangle rect;
  PhaseClass cls;
  int resolution = 0;
  int total_points = 0;
  int dilemma_free_points = 0;  // sole edge QNE and Pareto-optimal among edges
  std::optional<Correlation> example_free{};
  int nonedge_points = 0;       // scanned gammas admitting the non-edge branch
  bool classical_has_mixed = false;
  bool dilemma_resolved = false;  // some dilemma-free gamma and no non-edge interference
};

struct ShReport {
  ClassicalGame input;  // S-symmetric
  ClassicalGame dual;
  GameInvariants inv;
  Rectangle rect;
  PhaseClass cls;
  bool risk_dominant_second = false;  // a10 + a11 > a00 + a01 on the input
  int resolution = 0;
  int total_points = 0;
  int dilemma_free_points = 0;
  std::optional<Correlation> example_free{};
  int nonedge_points = 0;
  // Contact points where the non-edge region meets the h lines.
  std::array<PhasePoint, 2> contact_points{};
  // Payoff tables at the classical limit and at the maximally entangling
  // correlation for the equilibrium edges.
  Correlation cl_gamma{}, me_gamma{};
  PhasePoint cl_point{}, me_point{};
  PayoffTable cl_table{}, me_table{};
  bool tables_verified = false;  // printed equilibria pass the brute-force check
};

// Validated against the defining inequalities; ConstraintViolation names the
// first one that fails. Values are row-major {a00, a01, a10, a11}.
BosReport build_bos_report(const std::array<double, 4>& values, int resolution);
PdReport build_pd_report(const std::array<double, 4>& values, int resolution);
ShReport build_sh_report(const std::array<double, 4>& values, int resolution);

inline constexpr std::array<double, 4> kDefaultBosValues = {2.0, 0.0, 0.0, 1.0};
inline constexpr std::array<double, 4> kDefaultPdValues = {3.0, 0.0, 5.0, 1.0};
inline constexpr std::array<double, 4> kDefaultShValues = {4.0, 0.0, 3.0, 3.0};

std::string render_report(const BosReport& r);
std::string render_report(const PdReport& r);
std::string render_report(const ShReport& r);

}  // namespace qgame
