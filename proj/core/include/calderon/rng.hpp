#pragma once

#include <cstdint>

namespace calderon {

// Deterministic, platform-independent PRNG: splitmix64 core with Box-Muller
// normals. Trial streams derive from (seed, stream) so parallel and serial
// experiment runs see identical draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller; caches the second deviate.
  double normal();

  // Uniform integer in [lo, hi], inclusive.
  int uniform_int(int lo, int hi);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace calderon
