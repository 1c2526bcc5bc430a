#pragma once

// Test-only oracle: works in the 4-dimensional product space of two photons
// and never touches the symmetric-subspace code under test.

#include <array>
#include <cmath>

namespace oracle {

using Vec4 = std::array<double, 4>;
inline constexpr double kPi = 3.14159265358979323846;

inline Vec4 kron(const std::array<double, 2>& a, const std::array<double, 2>& b) {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

inline double dot(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

inline std::array<double, 2> polarization(double t) { return {std::cos(t), std::sin(t)}; }

// Dipole-frame symmetric basis |2,0>, |1,1>, |0,2> embedded in product space.
inline std::array<Vec4, 3> dipole_basis() {
  const double r = 1.0 / std::sqrt(2.0);
  return {Vec4{1, 0, 0, 0}, Vec4{0, r, r, 0}, Vec4{0, 0, 0, 1}};
}

inline Vec4 both_along(double t) { return kron(polarization(t), polarization(t)); }

inline Vec4 one_each(double t) {
  const Vec4 a = kron(polarization(t), polarization(t + kPi / 2));
  const Vec4 b = kron(polarization(t + kPi / 2), polarization(t));
  const double r = 1.0 / std::sqrt(2.0);
  return {r * (a[0] + b[0]), r * (a[1] + b[1]), r * (a[2] + b[2]), r * (a[3] + b[3])};
}

// Mixture-averaged (p20, p11, p02) for the {theta, theta+pi/2} ensemble.
inline std::array<double, 3> mixture_probs(double theta, bool identical) {
  const auto basis = dipole_basis();
  std::array<double, 3> acc{};
  double total = 0.0;
  for (double t : {theta, theta + kPi / 2}) {
    const double alpha = std::sqrt(2.0) * std::cos(t);
    const double beta = std::sin(t);
    const Vec4 s20 = both_along(t);
    const Vec4 s11 = one_each(t);
    if (identical) {
      Vec4 v{};
      for (int i = 0; i < 4; ++i) v[i] = alpha * s20[i] + beta * s11[i];
      total += 0.5 * dot(v, v);
      for (int k = 0; k < 3; ++k) acc[k] += 0.5 * std::pow(dot(basis[k], v), 2);
    } else {
      total += 0.5 * (alpha * alpha + beta * beta);
      for (int k = 0; k < 3; ++k) {
        acc[k] += 0.5 * (alpha * alpha * std::pow(dot(basis[k], s20), 2) +
                         beta * beta * std::pow(dot(basis[k], s11), 2));
      }
    }
  }
  return {acc[0] / total, acc[1] / total, acc[2] / total};
}

}  // namespace oracle
