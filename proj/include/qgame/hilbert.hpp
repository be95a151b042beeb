// Dense complex linear algebra on the two-qubit joint strategy space.
//
// Basis ordering is |00>, |01>, |10>, |11>; index (i,j) -> 2*i+j.
// Everything here is fixed-size (dimension 4), so we use plain arrays
// instead of a general matrix library.

#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace qgame {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Reduce an angle into [0, 2*pi).
double wrap_angle(double x);

// Thrown by expectation() when the imaginary residue of <psi|M|psi> is too
// large to be rounding noise.
struct NonHermitianOperator : std::runtime_error {
  explicit NonHermitianOperator(const std::string& what) : std::runtime_error(what) {}
};

// Pair of correlation angles (gamma1, gamma2), each reduced mod 2*pi.
struct Correlation {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  Correlation() = default;
  Correlation(double g1, double g2) : gamma1(wrap_angle(g1)), gamma2(wrap_angle(g2)) {}
};

// One player's pure strategy: the state
//   cos(theta/2)|0> + sin(theta/2) e^{i phi} |1>
// with theta in [0, pi] and phi in [0, 2*pi).
struct LocalStrategy {
  double theta = 0.0;
  double phi = 0.0;

  LocalStrategy() = default;
  LocalStrategy(double t, double p);

  std::array<Complex, 2> amplitudes() const;

  // Exchange the roles of |0> and |1> (up to a dropped global phase):
  // (theta, phi) -> (pi - theta, -phi mod 2*pi).
  LocalStrategy basis_flipped() const;
};

// Normalized state of the joint two-qubit space.
class JointState {
 public:
  // amp must have squared norm 1 within 1e-12.
  explicit JointState(const std::array<Complex, 4>& amp);

  static JointState basis(int i, int j);

  const std::array<Complex, 4>& amp() const { return amp_; }

  // <this|other>
  Complex inner(const JointState& other) const;

  // True when |<this|other>| is 1 within tol, i.e. the states differ only by
  // a global phase.
  bool same_up_to_phase(const JointState& other, double tol = 1e-10) const;

 private:
  std::array<Complex, 4> amp_;
};

// 4x4 complex matrix, row-major.
class Operator4 {
 public:
  Operator4();  // zero matrix

  static Operator4 identity();
  static Operator4 diagonal(const std::array<double, 4>& d);

  Complex& at(int r, int c) { return m_[4 * r + c]; }
  const Complex& at(int r, int c) const { return m_[4 * r + c]; }

  Operator4 operator+(const Operator4& o) const;
  Operator4 operator-(const Operator4& o) const;
  Operator4 operator*(const Operator4& o) const;
  Operator4 scaled(Complex s) const;
  Operator4 adjoint() const;

  std::array<Complex, 4> apply(const std::array<Complex, 4>& v) const;
  JointState apply(const JointState& s) const;  // caller must pass a unitary

  double max_abs_diff(const Operator4& o) const;
  double max_abs() const;
  bool is_hermitian(double tol = 1e-12) const;
  bool is_unitary(double tol = 1e-12) const;

 private:
  std::array<Complex, 16> m_;
};

// Basis-label involutions. All have integer entries, so products and
// conjugations with them are exact.
Operator4 swap_op();   // S|ij> = |ji>
Operator4 twist_op();  // T|ij> = |j~,i~>  (i~ = 1-i)

struct ConversionOps {
  Operator4 alice;  // C_A|ij> = |i~,j>
  Operator4 bob;    // C_B|ij> = |i,j~>
  Operator4 full;   // C = C_A * C_B
};
ConversionOps conversion_ops();

// exp(i*angle*M/2) for an involution M (M*M = I):
//   cos(angle/2) I + i sin(angle/2) M
Operator4 involution_exponential(double angle, const Operator4& m);

// J(gamma) = exp(i gamma1 S / 2) * exp(i gamma2 T / 2).
// S and T commute, so the factor order does not matter.
Operator4 correlation_unitary(const Correlation& c);

// <s|M|s>. The imaginary part must vanish within 1e-10 (scaled by the
// magnitude of M); otherwise NonHermitianOperator is thrown.
double expectation(const JointState& s, const Operator4& m);

// |alpha> (x) |beta>
JointState product_state(const LocalStrategy& alice, const LocalStrategy& bob);

}  // namespace qgame
