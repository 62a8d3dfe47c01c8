#pragma once

#include <cstdint>

namespace limlab {

// splitmix64; fixed across platforms so seeded runs are byte-reproducible.
struct Rng {
    uint64_t state;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n); n > 0. Modulo bias is irrelevant at our scales.
    uint64_t below(uint64_t n) { return next() % n; }

    bool coin() { return next() & 1u; }
};

}  // namespace limlab
