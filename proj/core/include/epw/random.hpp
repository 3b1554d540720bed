#pragma once

#include <cstdint>
#include <random>

namespace epw {

// Seeded generator with a platform-independent integer mapping
// (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [lo, hi], by rejection sampling.
  long uniform(long lo, long hi);

  // Independent stream for shard `index`, derived by hashing (seed, index).
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

 private:
  std::mt19937_64 engine_;
};

inline constexpr long kDefaultEntryBound = 10;

}  // namespace epw
