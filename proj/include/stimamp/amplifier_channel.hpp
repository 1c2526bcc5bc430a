#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "stimamp/fock_algebra.hpp"

namespace stimamp {

/// Physical constants entering the emission rate. Natural units by default.
struct EmissionConstants {
  double omega = 1.0;  ///< angular frequency
  double mu = 1.0;     ///< transition dipole moment magnitude
  double hbar = 1.0;
  double c = 1.0;
};

/// Final state of the atom that tags each stimulated-emission branch.
enum class AtomTag { G_theta, G_theta_perp };

/// Whether the two atom final states are orthogonal (branches add
/// incoherently) or the same state (branch amplitudes interfere).
enum class Variant { Distinguishable, Identical };

std::string_view to_string(Variant v);
/// Accepts "distinguishable" / "identical". Throws std::invalid_argument.
Variant parse_variant(std::string_view text);

/// One term of the post-scattering state.
struct AmplifierBranch {
  TwoPhotonState photon_state;  ///< normalized, dipole frame
  AtomTag atom;
  complex amplitude;  ///< |amplitude|^2 is the branch weight per lambda^2 dOmega

  double weight() const { return std::norm(amplitude); }
};

/// Amplifier output for one input photon.
///
/// Distinguishable: `branches` holds the two tagged terms. Identical: the
/// branches are summed into `coherent` (normalized) and `coherent_weight`
/// keeps the squared norm of the sum. Weights are per unit lambda^2 dOmega.
struct ScatteredState {
  Variant variant = Variant::Distinguishable;
  std::vector<AmplifierBranch> branches;
  TwoPhotonState coherent{};
  double coherent_weight = 0.0;

  /// Total two-photon weight, 1 + cos^2(theta) for input |theta>.
  double total_weight() const;
};

/// lambda^2 = omega^3 mu^2 / (8 pi^2 hbar c^3). Throws std::invalid_argument
/// unless every constant is strictly positive.
double lambda_squared(const EmissionConstants& k);

/// Stimulated-emission branch weights for input |theta>, per lambda^2 dOmega:
/// first = 2 cos^2(theta) into |2,0>^theta, second = sin^2(theta) into |1,1>^theta.
std::pair<double, double> branch_weights(PolarizationAngle theta);

/// Scatter a single photon |theta> off the excited atom.
///
/// Branch amplitudes are real: sqrt(2) cos(theta) on |2,0>^theta (atom left in
/// g_theta) and sin(theta) on |1,1>^theta (atom left in g_theta+pi/2). No
/// |0,2>^theta term is produced.
ScatteredState scatter(PolarizationAngle theta, Variant variant);

}  // namespace stimamp
