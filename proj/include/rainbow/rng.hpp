#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rainbow {

// Draw helpers pinned to the raw mt19937_64 stream.  std::uniform_int_distribution
// is free to vary between standard library implementations, so seeded runs
// stay reproducible only if the mapping from engine output to values is ours.

// Unbiased integer in [0, bound) via rejection; bound must be positive.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

inline int uniform_index(std::mt19937_64& rng, int bound) {
    return static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(bound)));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Fisher-Yates shuffle driven by uniform_below, for the same pinning reason.
template <typename T>
void shuffle_in_place(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = uniform_below(rng, i);
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace rainbow
