#pragma once

#include <cstdint>
#include <random>

namespace stimamp {

/// Seedable, splittable random stream.
///
/// The engine is mt19937_64 seeded through SplitMix64. Sub-streams are derived
/// from (seed, stream index) with `derive_seed`, so independent runs can be
/// merged without sharing state. `uniform()` uses a fixed 53-bit conversion
/// instead of std::uniform_real_distribution so draws are identical across
/// standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in (0, 1].
  double uniform();

  /// Independent stream for sub-run `index`.
  Rng split(std::uint64_t index) const { return Rng(derive_seed(seed_, index)); }

  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace stimamp
