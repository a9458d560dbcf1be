#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace rlsuite {

// Seeded random stream with a fixed, fully specified algorithm so that the
// same seed yields the same sample sequence on every platform and build:
//   - state initialisation: splitmix64 applied four times to the seed
//   - generator: xoshiro256** (Blackman & Vigna)
//   - uniform doubles: top 53 bits / 2^53
//   - integers in [0,n): Lemire's multiply-shift with rejection
//   - normals: Box-Muller, two uniforms consumed per call
// Child streams are derived from (seed, label) and are independent per label.
class RngStream {
 public:
  explicit RngStream(uint64_t seed = 0) : seed_(seed) {
    uint64_t x = seed;
    for (auto& s : state_) s = splitmix64(x);
  }

  uint64_t seed() const { return seed_; }

  /// Derive an independent stream identified by (seed, label).
  RngStream child(std::string_view label) const {
    return RngStream(mix(seed_, fnv1a64(label)));
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n); n must be positive.
  int64_t uniform_int(int64_t n) {
    const uint64_t bound = static_cast<uint64_t>(n);
    uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    auto lo = static_cast<uint64_t>(m);
    if (lo < bound) {
      const uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<int64_t>(m >> 64);
  }

  /// Uniform double in [lo, hi).
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Normal sample; consumes exactly two uniforms.
  double normal(double mean = 0.0, double stddev = 1.0) {
    double u1 = next_double();
    const double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;  // log(0) guard
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(6.283185307179586476925286766559 * u2);
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  static constexpr uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static uint64_t splitmix64(uint64_t& x) {
    uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  static uint64_t mix(uint64_t a, uint64_t b) {
    uint64_t x = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
    return splitmix64(x);
  }

  uint64_t state_[4];
  uint64_t seed_;
};

}  // namespace rlsuite
