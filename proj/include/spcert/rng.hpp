// Deterministic randomness. std::mt19937_64 output is pinned by the standard;
// the bounded draw below avoids std::uniform_int_distribution, whose mapping
// is implementation-defined and would break byte-identical certificates.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

namespace spcert {

// Unbiased draw from [0, n) by rejection.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("draw_below(0)");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    if (lo > hi)
        throw std::invalid_argument("draw_int with empty range");
    return lo + static_cast<std::int64_t>(
                    draw_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

} // namespace spcert
