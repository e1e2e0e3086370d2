// Copyright 2026 the holodense authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).

#ifndef HOLODENSE_RNG_HPP
#define HOLODENSE_RNG_HPP

#include <cstdint>

namespace holodense {

// Reproducible generators for the sampling experiments.  The stream contract
// is part of the output format: a report is a pure function of (inputs, seed),
// independent of worker count.  Substreams are derived with
// derive_stream_seed(seed, k), and worker/block k only ever consumes its own
// substream.

/// SplitMix64 (Steele, Lea, Flood 2014).  Used for seeding and stream mixing.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// xoshiro256** (Blackman, Vigna 2018), seeded through SplitMix64.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform draw from [0, bound) by rejection; bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

/// Substream seed for worker/block k: one SplitMix64 step from a mix of the
/// user seed and the stream index.  Documented so runs can be reproduced
/// outside this codebase.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t k) {
  return SplitMix64(seed ^ (0xA3EC647659359ACDULL * (k + 1))).next();
}

}  // namespace holodense

#endif  // HOLODENSE_RNG_HPP
