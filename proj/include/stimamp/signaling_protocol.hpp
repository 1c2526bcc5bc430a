#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "stimamp/amplifier_channel.hpp"
#include "stimamp/ensemble_statistics.hpp"
#include "stimamp/fock_algebra.hpp"
#include "stimamp/rng.hpp"

namespace stimamp {

struct ProtocolConfig {
  PolarizationAngle theta_bit0{0.0};
  PolarizationAngle theta_bit1{kPi / 4.0};
  std::uint64_t pairs_per_bit = 10000;
  Variant variant = Variant::Distinguishable;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument if pairs_per_bit is zero or the two symbol
  /// angles cannot be told apart by their |2,0> probability (in particular
  /// when they coincide modulo pi/2).
  void validate() const;
};

/// Bob's single-photon density matrix over the dipole basis.
struct DensityMatrix2 {
  std::array<std::array<complex, 2>, 2> m{};

  complex trace() const { return m[0][0] + m[1][1]; }
  bool is_hermitian(double tol = kExactTol) const;
  /// Smallest eigenvalue (the matrix is assumed Hermitian).
  double min_eigenvalue() const;
  /// max |m_ij - other_ij|
  double max_abs_diff(const DensityMatrix2& other) const;

  static DensityMatrix2 maximally_mixed();
};

struct TransmissionReport {
  std::vector<int> sent_bits;
  std::vector<int> decoded_bits;
  std::vector<double> per_bit_estimates;  ///< p20 estimate per bit
  double threshold = 0.0;                 ///< decision boundary on p20
  double error_rate = 0.0;
};

struct LinearityReport {
  PolarizationAngle theta;
  double p_model = 0.0;
  double p_linear = 0.0;
  double gap = 0.0;
};

/// Bob's photon after Alice measures her half of a rotation-invariant Bell
/// pair in the {theta, theta + pi/2} basis: either angle with probability 1/2.
PolarizationAngle epr_conditional_input(PolarizationAngle theta, std::uint64_t seed);
PolarizationAngle epr_conditional_input(PolarizationAngle theta, Rng& rng);

/// Sends each bit as `pairs_per_bit` two-photon amplifier outcomes at the
/// symbol angle, estimates p20 and decodes against the midpoint of the two
/// closed-form p20 values (a tie decodes to 0). Bit i uses the stream
/// Rng::derive_seed(config.seed, i).
TransmissionReport transmit(const ProtocolConfig& config, const std::vector<int>& bits);

/// (|t><t| + |t+pi/2><t+pi/2|) / 2.
DensityMatrix2 reduced_density(PolarizationAngle theta);

/// Compares the model's p20 at theta with the theta-independent value any map
/// linear in Bob's density matrix must give (evaluated on the dipole-basis
/// decomposition of I/2, i.e. at theta = 0).
LinearityReport linearity_gap(PolarizationAngle theta, Variant variant);

}  // namespace stimamp
