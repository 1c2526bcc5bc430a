#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "stimamp/amplifier_channel.hpp"
#include "stimamp/fock_algebra.hpp"
#include "stimamp/rng.hpp"

namespace stimamp {

/// Probabilities of the dipole-frame outcomes, conditioned on a two-photon
/// event.
struct ProbabilityTriple {
  double p20 = 0.0;
  double p11 = 0.0;
  double p02 = 0.0;

  double operator[](int i) const { return i == 0 ? p20 : (i == 1 ? p11 : p02); }
  double sum() const { return p20 + p11 + p02; }
  double max_abs_diff(const ProbabilityTriple& other) const;
};

struct CountTriple {
  std::uint64_t n20 = 0;
  std::uint64_t n11 = 0;
  std::uint64_t n02 = 0;

  std::uint64_t total() const { return n20 + n11 + n02; }
  CountTriple& operator+=(const CountTriple& rhs);
  bool operator==(const CountTriple&) const = default;

  /// Empirical frequencies. Throws std::domain_error when total() == 0.
  ProbabilityTriple estimate() const;
};

/// Weighted mixture of polarized single-photon inputs.
class MixtureEnsemble {
 public:
  struct Entry {
    double weight;
    PolarizationAngle theta;
  };

  /// Throws std::invalid_argument unless weights are positive and sum to 1.
  explicit MixtureEnsemble(std::vector<Entry> entries);

  /// {(1/2, theta), (1/2, theta + pi/2)}.
  static MixtureEnsemble orthogonal_pair(PolarizationAngle theta);

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  std::vector<Entry> entries_;
};

/// Mixture-averaged rate into |2,0>, per lambda^2 dOmega: (1 + cos^2 2t) / 2.
double differential_sigma_20(PolarizationAngle theta);

/// Closed-form outcome probabilities for the orthogonal-pair mixture.
ProbabilityTriple closed_form_probs(PolarizationAngle theta, Variant variant);

/// Outcome probabilities built only from scatter() and projections, with no
/// closed forms. Distinguishable branches add incoherently; the identical
/// variant projects the coherent sum.
ProbabilityTriple first_principles_probs(const MixtureEnsemble& ensemble, Variant variant);
ProbabilityTriple first_principles_probs(PolarizationAngle theta, Variant variant);

struct MonteCarloResult {
  CountTriple counts;
  ProbabilityTriple estimate;
  std::uint64_t attempts = 0;  ///< input photons drawn, including non-two-photon shots
};

/// Simulates shots until `n` two-photon outcomes have been recorded.
///
/// Per shot, in this order from a single Rng stream:
///   1. input angle (theta or theta + pi/2, 1/2 each);
///   2. two-photon acceptance with probability total_weight / 2, otherwise the
///      shot is discarded and the next one starts at step 1;
///   3. Distinguishable only: branch by inverse CDF over the branch weights;
///   4. outcome by inverse CDF over (|2,0>, |1,1>, |0,2>).
/// Inverse-CDF draws take u in (0, 1] and pick the smallest index whose
/// cumulative probability is >= u. Throws std::invalid_argument if n == 0.
MonteCarloResult monte_carlo_probs(PolarizationAngle theta, Variant variant,
                                   std::uint64_t n, std::uint64_t seed);
MonteCarloResult monte_carlo_probs(PolarizationAngle theta, Variant variant,
                                   std::uint64_t n, Rng& rng);

/// Same as monte_carlo_probs but split into `chunks` sub-runs with seeds
/// Rng::derive_seed(seed, chunk); counts are summed. Deterministic for a given
/// (seed, chunks) regardless of thread scheduling.
MonteCarloResult monte_carlo_probs_parallel(PolarizationAngle theta, Variant variant,
                                            std::uint64_t n, std::uint64_t seed,
                                            unsigned chunks);

struct SweepRow {
  double theta;
  ProbabilityTriple probs;
  double sigma20;
};

/// Inclusive uniform grid of closed-form rows. Throws std::invalid_argument
/// for steps < 2 or theta_min >= theta_max.
std::vector<SweepRow> sweep(double theta_min, double theta_max, int steps, Variant variant);

/// Smallest index k with cumulative(k) >= u, over weights in outcome order.
/// Zero-weight entries are never selected.
int inverse_cdf_pick(std::span<const double> weights, double u);

}  // namespace stimamp
