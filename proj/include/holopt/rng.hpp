#pragma once
// SplitMix64: tiny counter-based generator with published constants,
// identical output on every platform. Used for the random-search baseline
// and the randomized Hölder certificate checks.

#include <cstdint>

namespace holopt {

struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform double in [0, 1) with 53 random bits
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }
};

} // namespace holopt
