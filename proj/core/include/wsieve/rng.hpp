#pragma once

#include <cstdint>

namespace wsieve {

// splitmix64: tiny deterministic generator with identical streams on every
// platform. All randomized inputs (fuzz domains, random rationals in tests)
// go through this so runs are reproducible from the recorded seed.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bias removed by rejection.
  uint64_t below(uint64_t bound) {
    const uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool coin() { return (next() & 1) != 0; }

 private:
  uint64_t state_;
};

}  // namespace wsieve
