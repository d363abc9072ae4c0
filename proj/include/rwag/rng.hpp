#ifndef RWAG_RNG_HPP
#define RWAG_RNG_HPP

#include <cstdint>

namespace rwag {

// One round of the SplitMix64 finalizer (Vigna / Steele-Lea-Flood).
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Replica seed = two finalizer rounds applied to master_seed XOR replica_index.
// This exact derivation is part of the reproducibility contract: parallel and
// serial runs must agree bit for bit.
inline std::uint64_t derive_replica_seed(std::uint64_t master_seed,
                                         std::uint64_t replica_index) {
  return splitmix64_mix(splitmix64_mix(master_seed ^ replica_index));
}

// SplitMix64 stream generator. Deterministic across platforms; every draw a
// growth rule makes goes through this engine in a documented order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return splitmix64_mix(state_);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Unbiased uniform integer in [0, bound). Lemire multiply-shift with
  // rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    std::uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    std::uint64_t lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      std::uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace rwag

#endif  // RWAG_RNG_HPP
