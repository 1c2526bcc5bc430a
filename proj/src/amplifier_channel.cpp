#include "stimamp/amplifier_channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stimamp {

std::string_view to_string(Variant v) {
  return v == Variant::Distinguishable ? "distinguishable" : "identical";
}

Variant parse_variant(std::string_view text) {
  if (text == "distinguishable") return Variant::Distinguishable;
  if (text == "identical") return Variant::Identical;
  throw std::invalid_argument("unknown variant '" + std::string(text) +
                              "' (expected distinguishable or identical)");
}

double ScatteredState::total_weight() const {
  if (variant == Variant::Identical) return coherent_weight;
  double w = 0.0;
  for (const auto& b : branches) w += b.weight();
  return w;
}

double lambda_squared(const EmissionConstants& k) {
  if (!(k.omega > 0.0 && k.mu > 0.0 && k.hbar > 0.0 && k.c > 0.0)) {
    throw std::invalid_argument("emission constants must be strictly positive");
  }
  return k.omega * k.omega * k.omega * k.mu * k.mu /
         (8.0 * kPi * kPi * k.hbar * k.c * k.c * k.c);
}

std::pair<double, double> branch_weights(PolarizationAngle theta) {
  const double c = std::cos(theta.radians());
  const double s = std::sin(theta.radians());
  return {2.0 * c * c, s * s};
}

ScatteredState scatter(PolarizationAngle theta, Variant variant) {
  const double alpha = std::sqrt(2.0) * std::cos(theta.radians());
  const double beta = std::sin(theta.radians());
  const TwoPhotonState both_along = to_dipole_frame(theta, TwoPhotonState::n20());
  const TwoPhotonState one_each = to_dipole_frame(theta, TwoPhotonState::n11());

  ScatteredState out;
  out.variant = variant;
  if (variant == Variant::Distinguishable) {
    out.branches.push_back({both_along, AtomTag::G_theta, alpha});
    out.branches.push_back({one_each, AtomTag::G_theta_perp, beta});
    return out;
  }

  TwoPhotonState sum{};
  for (int i = 0; i < 3; ++i) sum[i] = alpha * both_along[i] + beta * one_each[i];
  sum.unnormalized = true;
  out.coherent_weight = sum.norm_squared();
  out.coherent = sum.normalized();
  return out;
}

}  // namespace stimamp
