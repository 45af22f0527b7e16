#pragma once

#include <cstdint>

namespace slidewin {

/// SplitMix64. Chosen as the project-wide generator because it is seedable,
/// splittable, trivially portable (three multiplies and shifts, fixed
/// constants) and produces identical streams on every platform. All
/// experiment reproducibility rests on this class; do not substitute
/// std::mt19937 or std::uniform_int_distribution, whose outputs are
/// implementation-defined.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound) by rejection; unbiased for any bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    // threshold = 2^64 mod bound, rejected values make the rest uniform
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform draw from [1, n] (alphabet convention).
  std::uint64_t next_symbol(std::uint64_t n) { return 1 + next_below(n); }

  /// Child generator; the parent advances one step.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

}  // namespace slidewin
