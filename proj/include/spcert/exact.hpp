// Exact arbitrary-precision rational arithmetic. Every predicate downstream
// (orientation, collinearity, injectivity) is an exact sign or equality test
// on these values; no floating point enters the pipeline.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace spcert {

using BigInt = boost::multiprecision::cpp_int;

// Canonical form is maintained by the backend: lowest terms, denominator > 0,
// zero stored as 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(BigInt num, BigInt den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rational(std::move(num), std::move(den));
}

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline int sign(const Rational& r) { return r.sign(); }

// "p/q", with "/q" omitted when q == 1.
inline std::string to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1)
        s += "/" + rat_den(r).str();
    return s;
}

inline int compare(const BigInt& a, const BigInt& b) { return a.compare(b); }

// floor(log2(n)) for n >= 1.
inline int floor_log2(std::uint64_t n) {
    if (n == 0)
        throw std::domain_error("floor_log2 of zero");
    int k = -1;
    while (n) {
        ++k;
        n >>= 1;
    }
    return k;
}

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace spcert
