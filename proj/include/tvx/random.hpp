#pragma once

#include <cstdint>
#include <vector>

#include "tvx/rational.hpp"

namespace tvx {

/// Counter-based generator: draw k of stream s under seed S is
/// splitmix64(S, s, k), so independent streams (one per trial, one per
/// check) can be split off without sharing state. Nothing reads ambient
/// entropy.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  CounterRng split(std::uint64_t substream) const {
    return CounterRng(seed_, mix(stream_ * 0x9E3779B97F4A7C15ull + substream + 1));
  }

  std::uint64_t next() { return mix(mix(seed_ ^ mix(stream_)) + counter_++); }

  // Uniform in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

  // Numerator uniform in [-99, 99], denominator uniform in [1, 20].
  Rational small_rational() { return make_rational(uniform(-99, 99), uniform(1, 20)); }

  Rational nonzero_small_rational() {
    for (;;) {
      Rational q = small_rational();
      if (q != 0) return q;
    }
  }

  std::vector<Rational> small_rationals(std::size_t count) {
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(small_rational());
    return out;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace tvx
