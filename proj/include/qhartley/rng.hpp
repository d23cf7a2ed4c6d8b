/**
 * Copyright 2026, the qhartley developers.
 *
 * This source code is licensed under the Apache License, Version 2.0 found in
 * the LICENSE.txt file in the root directory of this source tree.
 */

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qhartley {

// Splittable seeded generator. A single Rng is threaded explicitly through every
// sampling operation; split() derives an independent child stream so that parallel
// or repeated sub-experiments stay reproducible without sharing state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), eng_(mix(seed)) {}

  // Uniform double in [0, 1), 53-bit resolution. Hand-rolled so the stream does not
  // depend on the standard library's distribution implementation.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound).
  std::uint64_t integer(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t mask = ~0ULL;
    std::uint64_t limit = bound - 1;
    while ((mask >> 1) >= limit) mask >>= 1;
    for (;;) {
      const std::uint64_t r = eng_() & mask;
      if (r < bound) return r;
    }
  }

  // Standard normal via Box-Muller.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(6.283185307179586476925286766559 * u2);
  }

  Rng split() { return Rng(mix(seed_ ^ (0x9E3779B97F4A7C15ULL * ++splits_))); }

  std::uint64_t seed() const { return seed_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    // splitmix64 finalizer
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t splits_ = 0;
  std::mt19937_64 eng_;
};

}  // namespace qhartley
