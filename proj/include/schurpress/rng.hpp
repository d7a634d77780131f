#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace schurpress {

using RandomStream = std::mt19937_64;

/// SplitMix64 finalizer; maps any 64-bit value to a well-mixed one.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic sub-stream of a root seed. Parallel units index their own
/// stream with (tag, index) so results do not depend on scheduling.
inline RandomStream derive_stream(std::uint64_t root, std::uint64_t tag = 0,
                                  std::uint64_t index = 0) {
    std::uint64_t s = mix64(root);
    s = mix64(s ^ mix64(tag + 0x7f4a7c15ULL));
    s = mix64(s ^ mix64(index + 0x1ce4e5b9ULL));
    return RandomStream(s);
}

/// Uniform double in [0, 1) from the top 53 bits; identical across platforms.
inline double uniform_unit(RandomStream& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(RandomStream& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform_unit(rng);
}

/// Standard normal via Box-Muller (single value, second draw discarded).
inline double standard_normal(RandomStream& rng) {
    double u1 = 0.0;
    do {
        u1 = uniform_unit(rng);
    } while (u1 <= 0.0);
    const double u2 = uniform_unit(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace schurpress
