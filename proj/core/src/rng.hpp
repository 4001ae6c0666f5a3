#pragma once

#include <cstdint>
#include <random>

namespace lapmap::detail {

// Draws are built directly from mt19937_64 output words, so streams are
// reproducible independent of the standard library's distribution
// implementations.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64& rng, double p) {
    return uniform01(rng) < p;
}

inline int random_bit(std::mt19937_64& rng) {
    return static_cast<int>(rng() & 1u);
}

// Substream seed for keyed experiments (e.g. one stream per baseline n).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t key) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (key + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace lapmap::detail
