#pragma once

#include <optional>
#include <vector>

namespace stimamp {

/// Spacetime event in the lab frame S, units with c = 1.
struct Event {
  double t = 0.0;
  double x = 0.0;
};

/// Four-channel relay: two superluminal channels (one per inertial frame) and
/// two light channels joining them.
struct LoopConfig {
  double u = 2.0;     ///< superluminal speed in the sender's rest frame
  double beta = 0.0;  ///< velocity of frame S' relative to S
  double L = 1.0;     ///< superluminal channel length in S
  double ell = 0.0;   ///< light channel length in S

  /// Throws std::invalid_argument unless u > 0, 0 <= beta < 1, L > 0,
  /// ell >= 0 and u > beta (otherwise the return channel recedes from
  /// Alice(1) in S and the loop cannot close).
  void validate() const;
};

/// Events along the signal path, all in S.
struct LoopReport {
  Event emission;  ///< Alice(1) sends, at the origin
  Event handoff1;  ///< Bob(1) receives over the S channel
  Event relay;     ///< Alice(2) receives over the first light channel
  Event handoff2;  ///< Bob(2) receives over the S' channel
  Event arrival;   ///< Alice(1) receives over the second light channel
  double delta_t = 0.0;
  bool violated = false;
};

double lorentz_gamma(double beta);

/// Coordinates of `e` in a frame moving at +beta. Throws std::invalid_argument
/// for |beta| >= 1.
Event boost(const Event& e, double beta);

/// Relativistic velocity addition (v + beta) / (1 + v beta). Returns
/// std::nullopt when 1 + v beta vanishes (infinite coordinate velocity).
/// Throws std::invalid_argument for |beta| >= 1.
std::optional<double> compose_velocity(double v, double beta);

LoopReport run_loop(const LoopConfig& cfg);

/// Critical frame velocity above which the loop arrives before emission
/// (ell = 0), located by bisection to 1e-9. Returns std::nullopt for u <= 1,
/// where no frame velocity produces a violation.
std::optional<double> violation_threshold(double u, double L = 1.0);

}  // namespace stimamp
