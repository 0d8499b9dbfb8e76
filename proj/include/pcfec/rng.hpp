// Counter-based seed derivation for reproducible parallel simulation.
// Substream seeds depend only on (master seed, stream index), never on the
// worker layout, so results replay bit-identically at any thread count.
#pragma once

#include <cstdint>
#include <random>

namespace pcfec {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// i-th output of the SplitMix64 stream started at `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + index * 0x9E3779B97F4A7C15ULL);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

// Single random bit with a pinned consumption pattern (one engine draw).
inline int draw_bit(std::mt19937_64& gen) {
    return static_cast<int>(gen() & 1ULL);
}

} // namespace pcfec
