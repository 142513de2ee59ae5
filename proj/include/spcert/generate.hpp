// Set family generators used by the CLI and the test corpus.
#pragma once

#include "spcert/rng.hpp"
#include "spcert/set.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace spcert {

// {1, ..., n}
inline ComplexSet make_ap(std::size_t n) {
    if (n < 1)
        throw std::invalid_argument("ap: n must be >= 1");
    std::vector<GaussianRational> elems;
    elems.reserve(n);
    for (std::size_t k = 1; k <= n; ++k)
        elems.push_back(GaussianRational(static_cast<long>(k)));
    return ComplexSet::from_elements(std::move(elems));
}

// {r^1, ..., r^n}; r must not be 0 or +-1, and powers must stay distinct
// (a ratio that is a root of unity makes them cycle).
inline ComplexSet make_gp(std::size_t n, const GaussianRational& ratio) {
    if (n < 1)
        throw std::invalid_argument("gp: n must be >= 1");
    if (ratio.is_zero() || ratio == GaussianRational(1) ||
        ratio == GaussianRational(-1))
        throw std::invalid_argument("gp: ratio must not be 0 or +-1");
    std::vector<GaussianRational> elems;
    std::set<GaussianRational> seen;
    GaussianRational power(1);
    for (std::size_t k = 0; k < n; ++k) {
        power = power * ratio;
        if (!seen.insert(power).second)
            throw std::invalid_argument("gp: powers of " + to_string(ratio) +
                                        " repeat; ratio is a root of unity");
        elems.push_back(power);
    }
    return ComplexSet::from_elements(std::move(elems));
}

// {a + b i : 1 <= a, b <= side}
inline ComplexSet make_grid(std::size_t side) {
    if (side < 1)
        throw std::invalid_argument("grid: side must be >= 1");
    std::vector<GaussianRational> elems;
    elems.reserve(side * side);
    for (std::size_t a = 1; a <= side; ++a)
        for (std::size_t b = 1; b <= side; ++b)
            elems.push_back(GaussianRational(Rational(static_cast<long>(a)),
                                             Rational(static_cast<long>(b))));
    return ComplexSet::from_elements(std::move(elems));
}

// n distinct nonzero Gaussian rationals with numerators in [-bound, bound]
// and denominators in [1, bound], rejection-sampled deterministically.
inline ComplexSet make_random(std::size_t n, std::int64_t bound,
                              std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random: n must be >= 1");
    if (bound < 1)
        throw std::invalid_argument("random: bound must be >= 1");
    std::mt19937_64 rng(seed);
    std::set<GaussianRational> seen;
    std::vector<GaussianRational> elems;
    std::size_t attempts = 0;
    const std::size_t max_attempts = 10000 + 1000 * n;
    while (elems.size() < n) {
        if (++attempts > max_attempts)
            throw std::invalid_argument(
                "random: could not draw " + std::to_string(n) +
                " distinct elements with bound " + std::to_string(bound));
        Rational re = make_rational(draw_int(rng, -bound, bound),
                                    draw_int(rng, 1, bound));
        Rational im = make_rational(draw_int(rng, -bound, bound),
                                    draw_int(rng, 1, bound));
        GaussianRational g(std::move(re), std::move(im));
        if (g.is_zero())
            continue;
        if (seen.insert(g).second)
            elems.push_back(std::move(g));
    }
    return ComplexSet::from_elements(std::move(elems));
}

enum class Family { ap, gp, grid, random_values };

inline Family family_from_string(const std::string& name) {
    if (name == "ap") return Family::ap;
    if (name == "gp") return Family::gp;
    if (name == "grid") return Family::grid;
    if (name == "random") return Family::random_values;
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected ap|gp|grid|random)");
}

struct GenParams {
    GaussianRational ratio = GaussianRational(2); // gp
    std::int64_t bound = 10;                      // random
};

// n counts elements for every family; grid requires n to be a perfect square.
inline ComplexSet generate(Family family, std::size_t n, const GenParams& params,
                           std::uint64_t seed) {
    switch (family) {
    case Family::ap:
        return make_ap(n);
    case Family::gp:
        return make_gp(n, params.ratio);
    case Family::grid: {
        std::size_t side = 0;
        while ((side + 1) * (side + 1) <= n)
            ++side;
        if (side * side != n)
            throw std::invalid_argument("grid: n must be a perfect square, got " +
                                        std::to_string(n));
        return make_grid(side);
    }
    case Family::random_values:
        return make_random(n, params.bound, seed);
    }
    throw std::invalid_argument("unreachable family");
}

} // namespace spcert
