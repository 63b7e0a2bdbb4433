#pragma once

#include <cstdint>
#include <random>

namespace qroute {

// std::mt19937_64's output sequence is fixed by the standard, so every draw
// below is reproducible across standard libraries; the <random> distributions
// are not, hence the hand-rolled helpers.
using Rng = std::mt19937_64;

/// SplitMix64 finaliser; derives independent child seeds from a parent seed.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [0, n). Modulo bias is below n / 2^64.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) { return rng() % n; }

}  // namespace qroute
