#pragma once

#include <cstdint>

#include "primcone/numeric.hpp"

namespace primcone {

/// splitmix64; fixed algorithm so sampled test data is reproducible
/// across platforms and standard library versions.
struct Prng {
  uint64_t state;
  explicit Prng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// uniform in [0, n)
  uint64_t below(uint64_t n) { return next() % n; }

  long int_in(long lo, long hi) {  // inclusive
    return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  /// small rational, numerator in [-9,9], denominator in [1,7]
  Rat rat() {
    long num = int_in(-9, 9);
    long den = int_in(1, 7);
    return Rat(num, den);
  }

  /// small nonzero rational
  Rat nonzero_rat() {
    Rat q = rat();
    while (q == 0) q = rat();
    return q;
  }
};

}  // namespace primcone
