// Classical 2x2 games, their quantized payoff operators, symmetry checks and
// the duality (basis conversion) maps.

#pragma once

#include <array>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

#include "qgame/hilbert.hpp"

namespace qgame {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// How Bob's payoff matrix relates to Alice's.
//   S:        B[j][i] = A[i][j]          (partner exchange)
//   T:        B[1-j][1-i] = A[i][j]      (exchange plus strategy relabel)
//   Explicit: B given independently
enum class Symmetry { S, T, Explicit };

class ClassicalGame {
 public:
  // Entries row-major: {a00, a01, a10, a11}. All values must be finite.
  static ClassicalGame s_symmetric(const std::array<double, 4>& a);
  static ClassicalGame t_symmetric(const std::array<double, 4>& a);
  static ClassicalGame explicit_game(const std::array<double, 4>& a,
                                     const std::array<double, 4>& b);

  double a(int i, int j) const { return a_[2 * i + j]; }
  double b(int i, int j) const { return b_[2 * i + j]; }
  Symmetry symmetry() const { return sym_; }

  // Largest payoff magnitude, floored at 1. Used to scale tolerances.
  double scale() const;

 private:
  ClassicalGame(const std::array<double, 4>& a, const std::array<double, 4>& b, Symmetry s);
  std::array<double, 4> a_;
  std::array<double, 4> b_;
  Symmetry sym_;
};

struct PayoffOperatorPair {
  Operator4 op_a;
  Operator4 op_b;
};

enum class SymmetryCheck { S, T, Both, Neither };

// Scalar invariants of Alice's payoff matrix.
//   trace       = a00 + a01 + a10 + a11
//   tau         = a00 - a01 - a10 + a11
//   sigma_plus  = (a00 - a11) + (a01 - a10)
//   sigma_minus = (a00 - a11) - (a01 - a10)
struct GameInvariants {
  double trace = 0.0;
  double tau = 0.0;
  double sigma_plus = 0.0;
  double sigma_minus = 0.0;
};

enum class DualityMap { Alice, Bob, Full };

// Diagonal payoff operators diag(a00, a01, a10, a11) in the joint basis.
PayoffOperatorPair quantize(const ClassicalGame& g);

// Which conjugation identities hold for the pair: B = S A S and/or B = T A T.
SymmetryCheck check_symmetry(const PayoffOperatorPair& p, double tol = 1e-12);

// Conjugate both payoff operators by the chosen conversion operator.
PayoffOperatorPair dualize(const PayoffOperatorPair& p, DualityMap which);

// Same map expressed on the classical matrices. Alice: a[i][j] -> a[1-i][j],
// Bob: a[i][j] -> a[i][1-j], Full: both. The symmetry tag follows along
// (S and T trade places under a one-sided conversion).
ClassicalGame dualize(const ClassicalGame& g, DualityMap which);

// Strategy-space counterpart of the Alice-side conversion: the converted game
// played with (mapped alpha, beta, swapped gamma) pays exactly what the
// original game pays at (alpha, beta, gamma).
std::pair<LocalStrategy, Correlation> dual_strategy_map(const LocalStrategy& alpha,
                                                        const Correlation& c);

GameInvariants invariants(const ClassicalGame& g);

// Plain-text game description:
//   A = a00 a01 a10 a11
//   symmetry = S | T | explicit
//   B = b00 b01 b10 b11        (required iff symmetry = explicit)
// '#' starts a comment; keys may appear once each.
ClassicalGame parse_game_text(std::istream& in);
ClassicalGame load_game_file(const std::string& path);

}  // namespace qgame
