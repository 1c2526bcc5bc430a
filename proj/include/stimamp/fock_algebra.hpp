#pragma once

#include <array>
#include <complex>

namespace stimamp {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Tolerance for exact linear-algebra identities.
inline constexpr double kExactTol = 1e-12;
/// Tolerance used when validating caller-supplied operators.
inline constexpr double kInputTol = 1e-9;

/// Angle between a photon's polarization and the atom's transition dipole.
/// Every quantity in the model has period pi, so the value is kept in [0, pi).
class PolarizationAngle {
 public:
  PolarizationAngle() = default;
  explicit PolarizationAngle(double radians);

  double radians() const { return theta_; }

  /// The orthogonal polarization, theta + pi/2.
  PolarizationAngle perpendicular() const;

 private:
  double theta_ = 0.0;
};

/// Amplitudes over {|0>, |pi/2>}, where |0> is polarized along the dipole.
struct SinglePhotonState {
  complex amp_parallel;
  complex amp_perpendicular;

  double norm_squared() const;
};

/// Two-photon state in the symmetric subspace, dipole-aligned frame.
///
/// Basis order is (|2,0>, |1,1>, |0,2>): |2,0> has both photons along the
/// dipole, |0,2> both perpendicular, |1,1> one of each. The amplitude of
/// |1,1> sits in the middle so that matrix rows read in the same order as the
/// rotation formulas (|2,0>^t, |1,1>^t, |0,2>^t).
struct TwoPhotonState {
  complex amp_20;
  complex amp_11;
  complex amp_02;
  /// Set on intermediate, unnormalized vectors.
  bool unnormalized = false;

  static TwoPhotonState basis(int index);
  static TwoPhotonState n20() { return basis(0); }
  static TwoPhotonState n11() { return basis(1); }
  static TwoPhotonState n02() { return basis(2); }

  complex operator[](int i) const;
  complex& operator[](int i);

  double norm_squared() const;
  TwoPhotonState normalized() const;
};

/// Real 2x2 orthogonal matrix on the single-photon space.
///
/// `rotation(t)` has rows |t> and |t + pi/2> written in the dipole basis,
/// i.e. row k is the k-th rotated basis ket.
class RotationOperator2 {
 public:
  using Matrix = std::array<std::array<double, 2>, 2>;

  /// Throws std::invalid_argument unless `entries` is orthogonal with det +1
  /// (tolerance kInputTol).
  explicit RotationOperator2(const Matrix& entries);

  static RotationOperator2 rotation(PolarizationAngle theta);
  static RotationOperator2 identity();

  const Matrix& entries() const { return m_; }
  double operator()(int r, int c) const { return m_[r][c]; }

 private:
  Matrix m_;
};

/// Real 3x3 orthogonal matrix on the symmetric two-photon subspace,
/// basis order (|2,0>, |1,1>, |0,2>).
class RotationOperator3 {
 public:
  using Matrix = std::array<std::array<double, 3>, 3>;

  RotationOperator3() = default;
  explicit RotationOperator3(const Matrix& entries) : m_(entries) {}

  static RotationOperator3 identity();

  const Matrix& entries() const { return m_; }
  double operator()(int r, int c) const { return m_[r][c]; }

  RotationOperator3 transposed() const;
  RotationOperator3 operator*(const RotationOperator3& rhs) const;

  double max_abs_diff(const RotationOperator3& other) const;

 private:
  Matrix m_{};
};

SinglePhotonState single_photon_state(PolarizationAngle theta);

/// U(theta). Row k holds the k-th rotated basis state (|2,0>^t, |1,1>^t,
/// |0,2>^t) expanded in the dipole frame.
RotationOperator3 two_photon_rotation(PolarizationAngle theta);

/// Restriction of rot (x) rot to the symmetric subspace, using the embedding
/// |1,1> = (|0>|pi/2> + |pi/2>|0>)/sqrt(2). Independent of
/// two_photon_rotation; the two must agree for every angle.
RotationOperator3 symmetric_lift(const RotationOperator2& rot);

/// Plain matrix-vector product; preserves the unnormalized flag.
TwoPhotonState apply(const RotationOperator3& rot, const TwoPhotonState& state);

/// Converts amplitudes given over the rotated basis (|2,0>^t, |1,1>^t,
/// |0,2>^t) to dipole-frame amplitudes, i.e. U(t)^T applied to them.
TwoPhotonState to_dipole_frame(PolarizationAngle theta,
                               const TwoPhotonState& rotated_amplitudes);

/// |<a|b>|^2.
double projection_probability(const TwoPhotonState& a, const TwoPhotonState& b);

}  // namespace stimamp
