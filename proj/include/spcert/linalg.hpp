// Exact linear algebra in dimensions 2-4: vectors of rationals, dot products,
// determinants, orientation and proportionality predicates.
#pragma once

#include "spcert/exact.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace spcert {

template <std::size_t N>
struct VecQ {
    std::array<Rational, N> c{};

    const Rational& operator[](std::size_t i) const { return c[i]; }
    Rational& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const {
        for (const auto& v : c)
            if (v != 0) return false;
        return true;
    }

    friend bool operator==(const VecQ& a, const VecQ& b) { return a.c == b.c; }
    friend bool operator!=(const VecQ& a, const VecQ& b) { return !(a == b); }

    friend VecQ operator+(const VecQ& a, const VecQ& b) {
        VecQ r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend VecQ operator-(const VecQ& a, const VecQ& b) {
        VecQ r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend VecQ operator*(const Rational& s, const VecQ& a) {
        VecQ r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = s * a.c[i];
        return r;
    }
    friend VecQ operator-(const VecQ& a) {
        VecQ r;
        for (std::size_t i = 0; i < N; ++i) r.c[i] = -a.c[i];
        return r;
    }
};

using Vec2Q = VecQ<2>;
using Vec3Q = VecQ<3>;
using Vec4Q = VecQ<4>;

template <std::size_t N>
Rational dot(const VecQ<N>& a, const VecQ<N>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < N; ++i) s += a.c[i] * b.c[i];
    return s;
}

// Numeric lexicographic order; used wherever points must be sorted or
// deduplicated deterministically.
template <std::size_t N>
bool lex_less(const VecQ<N>& a, const VecQ<N>& b) {
    for (std::size_t i = 0; i < N; ++i) {
        if (a.c[i] < b.c[i]) return true;
        if (b.c[i] < a.c[i]) return false;
    }
    return false;
}

// a and b span a space of dimension < 2, i.e. all 2x2 minors vanish.
template <std::size_t N>
bool proportional(const VecQ<N>& a, const VecQ<N>& b) {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (a.c[i] * b.c[j] != a.c[j] * b.c[i]) return false;
    return true;
}

inline Rational det2(const Rational& a, const Rational& b,
                     const Rational& c, const Rational& d) {
    return a * d - b * c;
}

inline Rational det3(const Vec3Q& r0, const Vec3Q& r1, const Vec3Q& r2) {
    return r0[0] * det2(r1[1], r1[2], r2[1], r2[2])
         - r0[1] * det2(r1[0], r1[2], r2[0], r2[2])
         + r0[2] * det2(r1[0], r1[1], r2[0], r2[1]);
}

inline Rational det4(const Vec4Q& r0, const Vec4Q& r1,
                     const Vec4Q& r2, const Vec4Q& r3) {
    Rational d = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        Vec3Q m1, m2, m3;
        std::size_t k = 0;
        for (std::size_t col = 0; col < 4; ++col) {
            if (col == j) continue;
            m1[k] = r1[col];
            m2[k] = r2[col];
            m3[k] = r3[col];
            ++k;
        }
        Rational cof = r0[j] * det3(m1, m2, m3);
        d += (j % 2 == 0) ? cof : -cof;
    }
    return d;
}

// Sign of the cross product (b - a) x (c - a): >0 left turn, <0 right turn,
// 0 collinear. Exact.
inline int orient2(const Vec2Q& a, const Vec2Q& b, const Vec2Q& c) {
    Rational d = det2(b[0] - a[0], b[1] - a[1], c[0] - a[0], c[1] - a[1]);
    return d.sign();
}

template <std::size_t N>
std::string to_string(const VecQ<N>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < N; ++i) {
        if (i) s += ",";
        s += to_string(v.c[i]);
    }
    return s + ")";
}

} // namespace spcert
