#pragma once

#include <cstdint>

namespace gasketwalk {

/// SplitMix64: 64-bit state advanced by the golden-ratio increment, output
/// run through two xorshift-multiply finalizer rounds.  Chosen because the
/// whole generator fits on this screen and is trivially reproduced in any
/// language, which is the entire point for replayable simulations.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, bound), bound >= 1, by rejection sampling:
  /// draws below 2^64 mod bound are discarded so no residue is favored.
  constexpr std::uint64_t bounded(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

/// The SplitMix64 finalizer on its own, for seed derivation.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Seed of trial i's private stream.  Trials own disjoint generators, so any
/// partition of trial indices across workers replays identically.
constexpr std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return mix64(master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ull);
}

}  // namespace gasketwalk
