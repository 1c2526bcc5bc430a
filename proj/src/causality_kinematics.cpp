#include "stimamp/causality_kinematics.hpp"

#include <cmath>
#include <stdexcept>

namespace stimamp {

namespace {

void check_beta(double beta) {
  if (!(std::abs(beta) < 1.0)) {
    throw std::invalid_argument("frame velocity must satisfy |beta| < 1");
  }
}

}  // namespace

void LoopConfig::validate() const {
  if (!(u > 0.0) || !std::isfinite(u)) throw std::invalid_argument("u must be positive");
  if (!(beta >= 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in [0, 1)");
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("L must be positive");
  if (!(ell >= 0.0) || !std::isfinite(ell)) throw std::invalid_argument("ell must be non-negative");
  if (!(u > beta)) {
    throw std::invalid_argument("u must exceed beta for the return channel to reach Alice(1)");
  }
}

double lorentz_gamma(double beta) {
  check_beta(beta);
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

Event boost(const Event& e, double beta) {
  const double g = lorentz_gamma(beta);
  return {g * (e.t - beta * e.x), g * (e.x - beta * e.t)};
}

std::optional<double> compose_velocity(double v, double beta) {
  check_beta(beta);
  const double denom = 1.0 + v * beta;
  if (std::abs(denom) < 1e-12) return std::nullopt;
  return (v + beta) / denom;
}

LoopReport run_loop(const LoopConfig& cfg) {
  cfg.validate();
  LoopReport r;
  r.emission = {0.0, 0.0};
  r.handoff1 = {cfg.L / cfg.u, cfg.L};
  r.relay = {r.handoff1.t + cfg.ell, r.handoff1.x + cfg.ell};

  // The S' channel is parametrized by the S'-distance s it covers, so the
  // infinite S-velocity case (u * beta == 1) needs no special handling.
  // x_S(s) = relay.x - gamma * s * (1 - beta / u); choose s so Bob(2) receives
  // at x = ell.
  const double g = lorentz_gamma(cfg.beta);
  const double s = (r.relay.x - cfg.ell) / (g * (1.0 - cfg.beta / cfg.u));
  const Event relay_prime = boost(r.relay, cfg.beta);
  r.handoff2 = boost({relay_prime.t + s / cfg.u, relay_prime.x - s}, -cfg.beta);

  r.arrival = {r.handoff2.t + std::abs(r.handoff2.x), 0.0};
  r.delta_t = r.arrival.t - r.emission.t;
  r.violated = r.delta_t < 0.0;
  return r;
}

std::optional<double> violation_threshold(double u, double L) {
  if (!(u > 1.0)) return std::nullopt;
  auto delta = [&](double beta) { return run_loop({u, beta, L, 0.0}).delta_t; };
  double lo = 0.0;
  double hi = std::nextafter(1.0, 0.0);
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    if (delta(mid) < 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace stimamp
