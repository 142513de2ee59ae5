// Direction tallies nu(t) over complex lines through the origin and the
// multiplicative energy E(A) = sum_t nu^2(t), plus the brute-force quadruple
// oracle and the Cauchy-Schwarz lower bound check.
#pragma once

#include "spcert/set.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace spcert {

struct DirectionTally {
    // t -> number of ordered pairs (a1, a2) in A^2 with a1/a2 = t.
    std::map<GaussianRational, std::int64_t> nu;
    BigInt energy; // sum of nu^2 over all directions
};

inline DirectionTally direction_tally(const ComplexSet& A) {
    DirectionTally tally;
    for (const auto& a1 : A)
        for (const auto& a2 : A)
            ++tally.nu[gq_div(a1, a2)];
    for (const auto& [t, count] : tally.nu)
        tally.energy += BigInt(count) * count;
    return tally;
}

struct OracleCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Counts ordered quadruples with a1/a2 = a3/a4 by direct enumeration,
// compared as a1*a4 == a3*a2 so the route stays independent of the division
// used by direction_tally. O(|A|^4); refuses sets beyond the cap.
inline BigInt energy_oracle(const ComplexSet& A, std::size_t cap = 16) {
    if (A.size() > cap)
        throw OracleCapExceeded("energy_oracle: |A| = " + std::to_string(A.size()) +
                                " exceeds cap " + std::to_string(cap));
    BigInt count = 0;
    for (const auto& a1 : A)
        for (const auto& a2 : A)
            for (const auto& a3 : A)
                for (const auto& a4 : A)
                    if (a1 * a4 == a3 * a2)
                        ++count;
    return count;
}

struct CauchySchwarzVerdict {
    BigInt energy;
    Rational lower_bound; // |A|^4 / |A.A|, exact
    bool holds;           // energy >= lower_bound; a theorem, must be true
};

inline CauchySchwarzVerdict cauchy_schwarz_check(const DirectionTally& tally,
                                                 const ComplexSet& A,
                                                 std::size_t productset_size) {
    BigInt n = A.size();
    Rational bound = make_rational(n * n * n * n, BigInt(productset_size));
    CauchySchwarzVerdict v;
    v.energy = tally.energy;
    v.lower_bound = bound;
    v.holds = Rational(tally.energy) >= bound;
    return v;
}

} // namespace spcert
