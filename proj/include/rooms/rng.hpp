#pragma once

#include <cstdint>

// Platform-stable pseudo-randomness.  SplitMix64 (Steele, Lea & Flood,
// "Fast splittable pseudorandom number generators", OOPSLA 2014) is used
// everywhere randomness is needed so that a seed fixes every output bit
// independently of compiler, libc or platform.  This mapping is frozen:
// changing it would invalidate recorded walk statistics.

namespace rooms {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    return mix64(state);
  }
};

// Independent stream for the index-th walker of a run.
inline SplitMix64 stream_rng(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64{mix64(seed + 0x9E3779B97F4A7C15ull * (index + 1))};
}

// Unbiased uniform draw from [0, n); n >= 1.  Classic rejection sampling.
inline std::uint64_t bounded(SplitMix64& g, std::uint64_t n) {
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = g.next();
    if (r >= threshold) return r % n;
  }
}

}  // namespace rooms
