#pragma once

#include <cstdint>

#include "uqgln/rational.hpp"

namespace uqgln {

/// SplitMix64. Self-contained so that reports are reproducible across
/// platforms and standard-library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Draws the random rational samples used by every verification suite.
/// Numerators and denominators are uniform in [1, 10^4]; values are
/// positive, so a sampled q is never 0, -1, or a nontrivial root of unity.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long in_range(long lo, long hi) {
    return lo + static_cast<long>(rng_.next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational positive_rational() {
    const long num = in_range(1, 10000);
    const long den = in_range(1, 10000);
    return Rational(num, static_cast<unsigned long>(den));
  }

  /// A generic deformation parameter: positive, not equal to 1.
  Rational generic_q() {
    for (;;) {
      Rational q = positive_rational();
      if (q != Rational(1)) return q;
    }
  }

 private:
  SplitMix64 rng_;
};

/// Derives an independent deterministic stream for a named purpose.
std::uint64_t derive_seed(std::uint64_t base, const char* purpose, std::uint64_t index);

}  // namespace uqgln
