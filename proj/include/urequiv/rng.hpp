// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace urequiv {

/// SplitMix64 pseudo-random generator (Steele, Lea & Flood; the java.util
/// SplittableRandom mixer). The integer stream is a bijective hash of a
/// 64-bit counter, so the sequence for a given seed is bit-reproducible on
/// any platform. Nearby seeds give statistically independent streams, which
/// is what the batch drivers rely on: sample i of a batch uses seed + i.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller. Consumes exactly two draws per call
  /// (no cached spare), so the mapping from the integer stream to the
  /// gaussian stream is stateless and easy to reproduce.
  double next_gaussian() {
    // u1 in (0, 1] keeps the log finite.
    double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

 private:
  std::uint64_t state_;
};

}  // namespace urequiv
