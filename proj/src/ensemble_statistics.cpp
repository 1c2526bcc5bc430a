#include "stimamp/ensemble_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace stimamp {

namespace {

// Upper bound of ScatteredState::total_weight() over all input angles
// (1 + cos^2 theta at theta = 0).
constexpr double kMaxTwoPhotonWeight = 2.0;

// Everything a shot needs for one input angle, precomputed.
struct ShotModel {
  double accept = 0.0;
  std::vector<double> branch_weights;
  std::vector<std::array<double, 3>> outcome_probs;  // one row per branch
};

std::array<double, 3> outcome_distribution(const TwoPhotonState& state) {
  std::array<double, 3> p{};
  for (int k = 0; k < 3; ++k) {
    p[k] = projection_probability(TwoPhotonState::basis(k), state);
  }
  return p;
}

ShotModel make_shot_model(PolarizationAngle theta, Variant variant) {
  const ScatteredState s = scatter(theta, variant);
  ShotModel m;
  m.accept = s.total_weight() / kMaxTwoPhotonWeight;
  if (variant == Variant::Distinguishable) {
    for (const auto& b : s.branches) {
      m.branch_weights.push_back(b.weight());
      m.outcome_probs.push_back(outcome_distribution(b.photon_state));
    }
  } else {
    m.branch_weights.push_back(1.0);
    m.outcome_probs.push_back(outcome_distribution(s.coherent));
  }
  return m;
}

}  // namespace

double ProbabilityTriple::max_abs_diff(const ProbabilityTriple& other) const {
  return std::max({std::abs(p20 - other.p20), std::abs(p11 - other.p11),
                   std::abs(p02 - other.p02)});
}

CountTriple& CountTriple::operator+=(const CountTriple& rhs) {
  n20 += rhs.n20;
  n11 += rhs.n11;
  n02 += rhs.n02;
  return *this;
}

ProbabilityTriple CountTriple::estimate() const {
  const auto n = total();
  if (n == 0) throw std::domain_error("no two-photon outcomes to estimate from");
  const double d = static_cast<double>(n);
  return {static_cast<double>(n20) / d, static_cast<double>(n11) / d,
          static_cast<double>(n02) / d};
}

MixtureEnsemble::MixtureEnsemble(std::vector<Entry> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("mixture must have at least one entry");
  double total = 0.0;
  for (const auto& e : entries_) {
    if (!(e.weight > 0.0)) throw std::invalid_argument("mixture weights must be positive");
    total += e.weight;
  }
  if (std::abs(total - 1.0) > kExactTol) {
    throw std::invalid_argument("mixture weights must sum to 1");
  }
}

MixtureEnsemble MixtureEnsemble::orthogonal_pair(PolarizationAngle theta) {
  return MixtureEnsemble({{0.5, theta}, {0.5, theta.perpendicular()}});
}

double differential_sigma_20(PolarizationAngle theta) {
  const double c = std::cos(2.0 * theta.radians());
  return 0.5 * (1.0 + c * c);
}

ProbabilityTriple closed_form_probs(PolarizationAngle theta, Variant variant) {
  const double c = std::cos(2.0 * theta.radians());
  const double s = std::sin(2.0 * theta.radians());
  if (variant == Variant::Distinguishable) {
    return {(1.0 + c * c) / 3.0, 1.0 / 3.0, s * s / 3.0};
  }
  return {2.0 * c * c / 3.0, 1.0 / 3.0, 2.0 * s * s / 3.0};
}

ProbabilityTriple first_principles_probs(const MixtureEnsemble& ensemble, Variant variant) {
  std::array<double, 3> acc{};
  double total = 0.0;
  for (const auto& entry : ensemble.entries()) {
    const ScatteredState s = scatter(entry.theta, variant);
    total += entry.weight * s.total_weight();
    if (variant == Variant::Distinguishable) {
      // Orthogonal atom tags: each branch contributes its own probabilities.
      for (const auto& b : s.branches) {
        for (int k = 0; k < 3; ++k) {
          acc[k] += entry.weight * b.weight() *
                    projection_probability(TwoPhotonState::basis(k), b.photon_state);
        }
      }
    } else {
      for (int k = 0; k < 3; ++k) {
        acc[k] += entry.weight * s.coherent_weight *
                  projection_probability(TwoPhotonState::basis(k), s.coherent);
      }
    }
  }
  return {acc[0] / total, acc[1] / total, acc[2] / total};
}

ProbabilityTriple first_principles_probs(PolarizationAngle theta, Variant variant) {
  return first_principles_probs(MixtureEnsemble::orthogonal_pair(theta), variant);
}

int inverse_cdf_pick(std::span<const double> weights, double u) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw std::invalid_argument("inverse_cdf_pick: weights sum to zero");
  const double target = u * total;
  double cum = 0.0;
  int last_positive = -1;
  for (int k = 0; k < static_cast<int>(weights.size()); ++k) {
    if (weights[k] <= 0.0) continue;
    cum += weights[k];
    last_positive = k;
    if (cum >= target) return k;
  }
  return last_positive;
}

MonteCarloResult monte_carlo_probs(PolarizationAngle theta, Variant variant,
                                   std::uint64_t n, Rng& rng) {
  if (n == 0) throw std::invalid_argument("monte_carlo_probs: n must be at least 1");
  const std::array<ShotModel, 2> models{make_shot_model(theta, variant),
                                        make_shot_model(theta.perpendicular(), variant)};
  MonteCarloResult r;
  while (r.counts.total() < n) {
    ++r.attempts;
    const ShotModel& m = models[rng.uniform() <= 0.5 ? 0 : 1];
    if (rng.uniform() > m.accept) continue;
    std::size_t branch = 0;
    if (variant == Variant::Distinguishable) {
      branch = static_cast<std::size_t>(inverse_cdf_pick(m.branch_weights, rng.uniform()));
    }
    switch (inverse_cdf_pick(m.outcome_probs[branch], rng.uniform())) {
      case 0: ++r.counts.n20; break;
      case 1: ++r.counts.n11; break;
      default: ++r.counts.n02; break;
    }
  }
  r.estimate = r.counts.estimate();
  return r;
}

MonteCarloResult monte_carlo_probs(PolarizationAngle theta, Variant variant,
                                   std::uint64_t n, std::uint64_t seed) {
  Rng rng(seed);
  return monte_carlo_probs(theta, variant, n, rng);
}

MonteCarloResult monte_carlo_probs_parallel(PolarizationAngle theta, Variant variant,
                                            std::uint64_t n, std::uint64_t seed,
                                            unsigned chunks) {
  if (n == 0) throw std::invalid_argument("monte_carlo_probs: n must be at least 1");
  chunks = static_cast<unsigned>(std::clamp<std::uint64_t>(chunks, 1, n));
  std::vector<MonteCarloResult> parts(chunks);
  std::vector<std::thread> workers;
  workers.reserve(chunks);
  for (unsigned i = 0; i < chunks; ++i) {
    const std::uint64_t share = n / chunks + (i < n % chunks ? 1 : 0);
    workers.emplace_back([&, i, share] {
      Rng rng(Rng::derive_seed(seed, i));
      parts[i] = monte_carlo_probs(theta, variant, share, rng);
    });
  }
  for (auto& w : workers) w.join();

  MonteCarloResult merged;
  for (const auto& p : parts) {
    merged.counts += p.counts;
    merged.attempts += p.attempts;
  }
  merged.estimate = merged.counts.estimate();
  return merged;
}

std::vector<SweepRow> sweep(double theta_min, double theta_max, int steps, Variant variant) {
  if (steps < 2) throw std::invalid_argument("sweep: steps must be at least 2");
  if (!std::isfinite(theta_min) || !std::isfinite(theta_max) || !(theta_min < theta_max)) {
    throw std::invalid_argument("sweep: require finite theta_min < theta_max");
  }
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  const double step = (theta_max - theta_min) / (steps - 1);
  for (int i = 0; i < steps; ++i) {
    const double t = i == steps - 1 ? theta_max : theta_min + i * step;
    const PolarizationAngle a(t);
    rows.push_back({t, closed_form_probs(a, variant), differential_sigma_20(a)});
  }
  return rows;
}

}  // namespace stimamp
