#pragma once

#include <array>
#include <cstdint>

namespace rsn {

// xoshiro256** seeded through splitmix64.  Every generator is a pure
// function of (master seed, stream id), so Monte Carlo trials can be
// distributed across threads with stream = trial index and the merged
// results do not depend on scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : Rng(seed, 0) {}
  Rng(std::uint64_t master_seed, std::uint64_t stream);

  std::uint64_t next_u64();

  // Uniform double in [0,1), 53 random bits.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in {0, ..., bound-1}, unbiased (rejection).
  std::uint64_t next_below(std::uint64_t bound);

  // Standard normal via Marsaglia polar; pairs are cached.
  double next_gauss();

 private:
  std::array<std::uint64_t, 4> state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace rsn
