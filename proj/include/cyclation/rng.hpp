#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace cyclation {

inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256** seeded through splitmix64.  Streams are derived by mixing a
// stream index into the seed, so (seed, stream) pairs give independent,
// reproducible generators regardless of how work is split across workers.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t stream = 0) : seed_(seed), stream_(stream) {
    uint64_t sm = seed ^ (0x6a09e667f3bcc909ULL * (stream + 1));
    for (auto& word : s_) word = splitmix64_next(sm);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, bound), Lemire's multiply-shift with rejection.
  uint64_t next_below(uint64_t bound) {
    uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * bound;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < bound) {
      uint64_t threshold = (0 - bound) % bound;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * bound;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  // Uniform in (0, 1): 53-bit mantissa, offset half a step so 0 is excluded.
  double next_real() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double next_exponential() { return -std::log(next_real()); }

  // Sum-of-exponentials Poisson; mean is small everywhere we use this.
  uint64_t next_poisson(double mean) {
    uint64_t k = 0;
    double acc = next_exponential();
    while (acc < mean) {
      ++k;
      acc += next_exponential();
    }
    return k;
  }

  Rng derive(uint64_t stream) const { return Rng(seed_, stream); }

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

  static std::string identity() {
    return "xoshiro256** (splitmix64 seeding, per-stream derivation)";
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t seed_;
  uint64_t stream_;
  uint64_t s_[4];
};

}  // namespace cyclation
