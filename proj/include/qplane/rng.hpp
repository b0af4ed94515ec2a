#pragma once

#include <cstdint>

#include "qplane/numeric.hpp"

namespace qplane {

// SplitMix64. Used instead of <random> so that seeded runs produce identical
// streams on every platform and standard library.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,1)
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [lo,hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // integer in [lo,hi] inclusive
    int uniform_int(int lo, int hi) {
        return lo + int(next_u64() % uint64_t(hi - lo + 1));
    }

    cplx uniform_cplx(double radius) {
        return cplx(uniform(-radius, radius), uniform(-radius, radius));
    }

  private:
    uint64_t state_;
};

}  // namespace qplane
