#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace qpr {

// SplitMix64 counter generator. The state advances by a fixed odd constant,
// so draw k is a pure function of (seed, k); seeds are part of the external
// interface and identical seeds give bitwise-identical streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform on the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes two uniforms per call.
  double normal() {
    const double u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

  std::complex<double> complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }

  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Decorrelated stream k derived from a base seed; used for retry loops.
  static std::uint64_t substream(std::uint64_t seed, std::uint64_t k) {
    return mix(seed ^ (0xD1342543DE82EF95ULL * (k + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace qpr
