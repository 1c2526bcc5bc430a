#include "stimamp/fock_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stimamp {

namespace {

double canonical_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("polarization angle must be finite");
  }
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi) t = 0.0;
  return t;
}

}  // namespace

PolarizationAngle::PolarizationAngle(double radians)
    : theta_(canonical_angle(radians)) {}

PolarizationAngle PolarizationAngle::perpendicular() const {
  return PolarizationAngle(theta_ + kPi / 2.0);
}

double SinglePhotonState::norm_squared() const {
  return std::norm(amp_parallel) + std::norm(amp_perpendicular);
}

TwoPhotonState TwoPhotonState::basis(int index) {
  TwoPhotonState s{};
  s[index] = 1.0;
  return s;
}

complex TwoPhotonState::operator[](int i) const {
  switch (i) {
    case 0: return amp_20;
    case 1: return amp_11;
    case 2: return amp_02;
  }
  throw std::out_of_range("two-photon basis index must be 0, 1 or 2");
}

complex& TwoPhotonState::operator[](int i) {
  switch (i) {
    case 0: return amp_20;
    case 1: return amp_11;
    case 2: return amp_02;
  }
  throw std::out_of_range("two-photon basis index must be 0, 1 or 2");
}

double TwoPhotonState::norm_squared() const {
  return std::norm(amp_20) + std::norm(amp_11) + std::norm(amp_02);
}

TwoPhotonState TwoPhotonState::normalized() const {
  const double n = std::sqrt(norm_squared());
  if (n == 0.0) throw std::domain_error("cannot normalize the zero vector");
  return {amp_20 / n, amp_11 / n, amp_02 / n, false};
}

RotationOperator2::RotationOperator2(const Matrix& entries) : m_(entries) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double dot = m_[0][i] * m_[0][j] + m_[1][i] * m_[1][j];
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > kInputTol) {
        throw std::invalid_argument("RotationOperator2: matrix is not orthogonal");
      }
    }
  }
  const double det = m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0];
  if (std::abs(det - 1.0) > kInputTol) {
    throw std::invalid_argument("RotationOperator2: determinant is not +1");
  }
}

RotationOperator2 RotationOperator2::rotation(PolarizationAngle theta) {
  const double c = std::cos(theta.radians());
  const double s = std::sin(theta.radians());
  return RotationOperator2(Matrix{{{c, s}, {-s, c}}});
}

RotationOperator2 RotationOperator2::identity() {
  return RotationOperator2(Matrix{{{1.0, 0.0}, {0.0, 1.0}}});
}

RotationOperator3 RotationOperator3::identity() {
  Matrix m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1.0;
  return RotationOperator3(m);
}

RotationOperator3 RotationOperator3::transposed() const {
  Matrix t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = m_[j][i];
  return RotationOperator3(t);
}

RotationOperator3 RotationOperator3::operator*(const RotationOperator3& rhs) const {
  Matrix p{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) p[i][j] += m_[i][k] * rhs.m_[k][j];
  return RotationOperator3(p);
}

double RotationOperator3::max_abs_diff(const RotationOperator3& other) const {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(m_[i][j] - other.m_[i][j]));
  return d;
}

SinglePhotonState single_photon_state(PolarizationAngle theta) {
  return {std::cos(theta.radians()), std::sin(theta.radians())};
}

RotationOperator3 two_photon_rotation(PolarizationAngle theta) {
  const double t = theta.radians();
  const double c2 = std::cos(t) * std::cos(t);
  const double s2 = std::sin(t) * std::sin(t);
  const double off = std::sin(2.0 * t) / std::sqrt(2.0);
  const double cos2t = std::cos(2.0 * t);
  return RotationOperator3(RotationOperator3::Matrix{{
      {c2, off, s2},       // |2,0>^t
      {-off, cos2t, off},  // |1,1>^t
      {s2, -off, c2},      // |0,2>^t
  }});
}

RotationOperator3 symmetric_lift(const RotationOperator2& rot) {
  // Product basis |ab>, index 2a + b, a/b = 0 (parallel) or 1 (perpendicular).
  std::array<std::array<double, 4>, 4> kron{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) kron[2 * a + b][2 * c + d] = rot(a, c) * rot(b, d);

  // Isometry from the symmetric subspace into the product space.
  const double r = 1.0 / std::sqrt(2.0);
  const std::array<std::array<double, 4>, 3> embed{{
      {1.0, 0.0, 0.0, 0.0},
      {0.0, r, r, 0.0},
      {0.0, 0.0, 0.0, 1.0},
  }};

  RotationOperator3::Matrix out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) out[i][j] += embed[i][p] * kron[p][q] * embed[j][q];
  return RotationOperator3(out);
}

TwoPhotonState apply(const RotationOperator3& rot, const TwoPhotonState& state) {
  TwoPhotonState out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += rot(i, j) * state[j];
  out.unnormalized = state.unnormalized;
  return out;
}

TwoPhotonState to_dipole_frame(PolarizationAngle theta,
                               const TwoPhotonState& rotated_amplitudes) {
  return apply(two_photon_rotation(theta).transposed(), rotated_amplitudes);
}

double projection_probability(const TwoPhotonState& a, const TwoPhotonState& b) {
  complex inner = 0.0;
  for (int i = 0; i < 3; ++i) inner += std::conj(a[i]) * b[i];
  return std::norm(inner);
}

}  // namespace stimamp
