#include "qgame/hilbert.hpp"

#include <cmath>

namespace qgame {

double wrap_angle(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y = 0.0;  // fmod can land exactly on 2*pi after the shift
  return y;
}

LocalStrategy::LocalStrategy(double t, double p) {
  // Tolerate rounding just past the poles, reject anything further out.
  const double slack = 1e-9;
  if (t < -slack || t > kPi + slack)
    throw std::invalid_argument("LocalStrategy: theta outside [0, pi]");
  theta = std::min(std::max(t, 0.0), kPi);
  phi = wrap_angle(p);
}

std::array<Complex, 2> LocalStrategy::amplitudes() const {
  return {Complex(std::cos(theta / 2.0), 0.0),
          std::polar(std::sin(theta / 2.0), phi)};
}

LocalStrategy LocalStrategy::basis_flipped() const {
  return LocalStrategy(kPi - theta, wrap_angle(kTwoPi - phi));
}

JointState::JointState(const std::array<Complex, 4>& amp) : amp_(amp) {
  double n2 = 0.0;
  for (const Complex& z : amp_) n2 += std::norm(z);
  if (std::abs(n2 - 1.0) > 1e-12)
    throw std::invalid_argument("JointState: amplitudes are not normalized");
}

JointState JointState::basis(int i, int j) {
  std::array<Complex, 4> a{};
  a[2 * i + j] = Complex(1.0, 0.0);
  return JointState(a);
}

Complex JointState::inner(const JointState& other) const {
  Complex s(0.0, 0.0);
  for (int k = 0; k < 4; ++k) s += std::conj(amp_[k]) * other.amp_[k];
  return s;
}

bool JointState::same_up_to_phase(const JointState& other, double tol) const {
  return std::abs(std::abs(inner(other)) - 1.0) <= tol;
}

Operator4::Operator4() { m_.fill(Complex(0.0, 0.0)); }

Operator4 Operator4::identity() {
  Operator4 r;
  for (int k = 0; k < 4; ++k) r.at(k, k) = Complex(1.0, 0.0);
  return r;
}

Operator4 Operator4::diagonal(const std::array<double, 4>& d) {
  Operator4 r;
  for (int k = 0; k < 4; ++k) r.at(k, k) = Complex(d[k], 0.0);
  return r;
}

Operator4 Operator4::operator+(const Operator4& o) const {
  Operator4 r;
  for (int k = 0; k < 16; ++k) r.m_[k] = m_[k] + o.m_[k];
  return r;
}

Operator4 Operator4::operator-(const Operator4& o) const {
  Operator4 r;
  for (int k = 0; k < 16; ++k) r.m_[k] = m_[k] - o.m_[k];
  return r;
}

Operator4 Operator4::operator*(const Operator4& o) const {
  Operator4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Complex s(0.0, 0.0);
      for (int k = 0; k < 4; ++k) s += at(i, k) * o.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

Operator4 Operator4::scaled(Complex s) const {
  Operator4 r;
  for (int k = 0; k < 16; ++k) r.m_[k] = m_[k] * s;
  return r;
}

Operator4 Operator4::adjoint() const {
  Operator4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = std::conj(at(j, i));
  return r;
}

std::array<Complex, 4> Operator4::apply(const std::array<Complex, 4>& v) const {
  std::array<Complex, 4> r{};
  for (int i = 0; i < 4; ++i) {
    Complex s(0.0, 0.0);
    for (int j = 0; j < 4; ++j) s += at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

JointState Operator4::apply(const JointState& s) const { return JointState(apply(s.amp())); }

double Operator4::max_abs_diff(const Operator4& o) const {
  double m = 0.0;
  for (int k = 0; k < 16; ++k) m = std::max(m, std::abs(m_[k] - o.m_[k]));
  return m;
}

double Operator4::max_abs() const {
  double m = 0.0;
  for (const Complex& z : m_) m = std::max(m, std::abs(z));
  return m;
}

bool Operator4::is_hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }

bool Operator4::is_unitary(double tol) const {
  return (adjoint() * *this).max_abs_diff(identity()) <= tol;
}

namespace {

// Permutation operator sending basis index k to perm[k].
Operator4 permutation_op(const std::array<int, 4>& perm) {
  Operator4 r;
  for (int k = 0; k < 4; ++k) r.at(perm[k], k) = Complex(1.0, 0.0);
  return r;
}

}  // namespace

Operator4 swap_op() { return permutation_op({0, 2, 1, 3}); }

Operator4 twist_op() { return permutation_op({3, 1, 2, 0}); }

ConversionOps conversion_ops() {
  ConversionOps ops;
  ops.alice = permutation_op({2, 3, 0, 1});
  ops.bob = permutation_op({1, 0, 3, 2});
  ops.full = permutation_op({3, 2, 1, 0});
  return ops;
}

Operator4 involution_exponential(double angle, const Operator4& m) {
  const double c = std::cos(angle / 2.0);
  const double s = std::sin(angle / 2.0);
  return Operator4::identity().scaled(Complex(c, 0.0)) + m.scaled(Complex(0.0, s));
}

Operator4 correlation_unitary(const Correlation& c) {
  return involution_exponential(c.gamma1, swap_op()) *
         involution_exponential(c.gamma2, twist_op());
}

double expectation(const JointState& s, const Operator4& m) {
  const std::array<Complex, 4> mv = m.apply(s.amp());
  Complex e(0.0, 0.0);
  for (int k = 0; k < 4; ++k) e += std::conj(s.amp()[k]) * mv[k];
  const double residue_tol = 1e-10 * std::max(1.0, m.max_abs());
  if (std::abs(e.imag()) >= residue_tol)
    throw NonHermitianOperator("expectation: imaginary residue " + std::to_string(e.imag()));
  return e.real();
}

JointState product_state(const LocalStrategy& alice, const LocalStrategy& bob) {
  const std::array<Complex, 2> xi = alice.amplitudes();
  const std::array<Complex, 2> chi = bob.amplitudes();
  std::array<Complex, 4> amp{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) amp[2 * i + j] = xi[i] * chi[j];
  return JointState(amp);
}

}  // namespace qgame
