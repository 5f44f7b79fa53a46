// Seeded random number utilities. All sampling goes through these helpers so
// that a run is a pure function of (config, seed).
#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace monocity {

using Rng = std::mt19937_64;

// splitmix64 finalizer, used both as a mixer and to derive independent
// sub-stream seeds from (base, a, b).
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    return mix64(base ^ mix64(a ^ mix64(b)));
}

// Uniform double in [0,1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(double p, Rng& rng) { return uniform01(rng) < p; }

// Index into a cumulative weight table (strictly increasing, last = total).
inline std::size_t sample_cumulative(std::span<const double> cumulative, double u) {
    const double target = u * cumulative.back();
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (cumulative[mid] <= target)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

} // namespace monocity
