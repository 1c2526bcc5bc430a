#include "stimamp/signaling_protocol.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stimamp {

namespace {

// Minimum separation of the two symbols' p20 values for the decoder to work.
constexpr double kSymbolSeparation = 1e-9;

DensityMatrix2 projector(const SinglePhotonState& s) {
  DensityMatrix2 d;
  const std::array<complex, 2> v{s.amp_parallel, s.amp_perpendicular};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) d.m[i][j] = v[i] * std::conj(v[j]);
  return d;
}

}  // namespace

void ProtocolConfig::validate() const {
  if (pairs_per_bit == 0) throw std::invalid_argument("pairs_per_bit must be at least 1");
  const double quarter = kPi / 2.0;
  const double d = std::fmod(std::abs(theta_bit0.radians() - theta_bit1.radians()), quarter);
  if (d < kInputTol || quarter - d < kInputTol) {
    throw std::invalid_argument("symbol angles coincide modulo pi/2 and cannot be distinguished");
  }
  const double p0 = closed_form_probs(theta_bit0, variant).p20;
  const double p1 = closed_form_probs(theta_bit1, variant).p20;
  if (std::abs(p0 - p1) < kSymbolSeparation) {
    throw std::invalid_argument("symbol angles give the same |2,0> probability");
  }
}

bool DensityMatrix2::is_hermitian(double tol) const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (std::abs(m[i][j] - std::conj(m[j][i])) > tol) return false;
  return true;
}

double DensityMatrix2::min_eigenvalue() const {
  const double a = m[0][0].real();
  const double d = m[1][1].real();
  const double half_gap = 0.5 * (a - d);
  return 0.5 * (a + d) - std::sqrt(half_gap * half_gap + std::norm(m[0][1]));
}

double DensityMatrix2::max_abs_diff(const DensityMatrix2& other) const {
  double r = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m[i][j] - other.m[i][j]));
  return r;
}

DensityMatrix2 DensityMatrix2::maximally_mixed() {
  DensityMatrix2 d;
  d.m[0][0] = 0.5;
  d.m[1][1] = 0.5;
  return d;
}

PolarizationAngle epr_conditional_input(PolarizationAngle theta, Rng& rng) {
  return rng.uniform() <= 0.5 ? theta : theta.perpendicular();
}

PolarizationAngle epr_conditional_input(PolarizationAngle theta, std::uint64_t seed) {
  Rng rng(seed);
  return epr_conditional_input(theta, rng);
}

TransmissionReport transmit(const ProtocolConfig& config, const std::vector<int>& bits) {
  config.validate();
  if (bits.empty()) throw std::invalid_argument("transmit: bit list is empty");
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("transmit: bits must be 0 or 1");
  }

  const double p0 = closed_form_probs(config.theta_bit0, config.variant).p20;
  const double p1 = closed_form_probs(config.theta_bit1, config.variant).p20;
  TransmissionReport report;
  report.threshold = 0.5 * (p0 + p1);
  report.sent_bits = bits;

  std::size_t errors = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const PolarizationAngle symbol = bits[i] == 0 ? config.theta_bit0 : config.theta_bit1;
    Rng rng(Rng::derive_seed(config.seed, i));
    const double estimate =
        monte_carlo_probs(symbol, config.variant, config.pairs_per_bit, rng).estimate.p20;
    int decoded = 0;
    if (p1 > p0) {
      decoded = estimate > report.threshold ? 1 : 0;
    } else {
      decoded = estimate < report.threshold ? 1 : 0;
    }
    report.per_bit_estimates.push_back(estimate);
    report.decoded_bits.push_back(decoded);
    if (decoded != bits[i]) ++errors;
  }
  report.error_rate = static_cast<double>(errors) / static_cast<double>(bits.size());
  return report;
}

DensityMatrix2 reduced_density(PolarizationAngle theta) {
  const DensityMatrix2 a = projector(single_photon_state(theta));
  const DensityMatrix2 b = projector(single_photon_state(theta.perpendicular()));
  DensityMatrix2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.m[i][j] = 0.5 * (a.m[i][j] + b.m[i][j]);
  return out;
}

LinearityReport linearity_gap(PolarizationAngle theta, Variant variant) {
  LinearityReport r;
  r.theta = theta;
  r.p_model = closed_form_probs(theta, variant).p20;
  r.p_linear = closed_form_probs(PolarizationAngle(0.0), variant).p20;
  r.gap = r.p_model - r.p_linear;
  return r;
}

}  // namespace stimamp
