#pragma once

#include <cstdint>

namespace swan {

/* splitmix64; self-contained so fuzz reports are byte-identical across
 * platforms and standard-library versions. */
class Rng {
 public:
  explicit Rng(uint64_t seed) : s_(seed) {}

  uint64_t next() {
    uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  uint64_t below(uint64_t n) {
    return (uint64_t)(((__uint128_t)next() * n) >> 64);
  }

  int64_t between(int64_t lo, int64_t hi) {  // inclusive
    return lo + (int64_t)below((uint64_t)(hi - lo + 1));
  }

  bool coin() { return next() & 1; }

  static uint64_t mix(uint64_t a, uint64_t b) {
    Rng r(a ^ (0x632be59bd9b4e019ull * (b + 1)));
    return r.next();
  }

 private:
  uint64_t s_;
};

}  // namespace swan
