// Elements of Q(i): exact complex rationals. These carry the set A and every
// direction ratio t = a1/a2.
#pragma once

#include "spcert/exact.hpp"

#include <stdexcept>
#include <string>

namespace spcert {

struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational real, Rational imag)
        : re(std::move(real)), im(std::move(imag)) {}
    explicit GaussianRational(Rational real) : re(std::move(real)) {}
    explicit GaussianRational(long real) : re(real) {}

    bool is_zero() const { return re == 0 && im == 0; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) {
        return {-a.re, -a.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

inline GaussianRational conj(const GaussianRational& a) { return {a.re, -a.im}; }

inline GaussianRational gq_i() { return {Rational(0), Rational(1)}; }

inline GaussianRational gq_div(const GaussianRational& a, const GaussianRational& b) {
    if (b.is_zero())
        throw std::domain_error("gaussian division by zero");
    Rational n = b.re * b.re + b.im * b.im;
    GaussianRational p = a * conj(b);
    return {p.re / n, p.im / n};
}

// Total order on canonical forms: lexicographic on the integer tuple
// (re.num, re.den, im.num, im.den). Not the numeric order; it exists to make
// every keyed collection and emitted list deterministic.
inline int compare_total(const GaussianRational& a, const GaussianRational& b) {
    if (int c = compare(rat_num(a.re), rat_num(b.re)); c != 0) return c;
    if (int c = compare(rat_den(a.re), rat_den(b.re)); c != 0) return c;
    if (int c = compare(rat_num(a.im), rat_num(b.im)); c != 0) return c;
    return compare(rat_den(a.im), rat_den(b.im));
}

inline bool operator<(const GaussianRational& a, const GaussianRational& b) {
    return compare_total(a, b) < 0;
}

// Canonical text form, matching the set-file term grammar:
// "p/q", "i", "3/4i", "2+3i", "2-i", "-1i".
inline std::string to_string(const GaussianRational& g) {
    if (g.im == 0)
        return to_string(g.re);
    std::string imtxt = (g.im == 1)    ? "i"
                        : (g.im == -1) ? "-1i"
                                       : to_string(g.im) + "i";
    if (g.re == 0)
        return imtxt;
    if (g.im > 0)
        return to_string(g.re) + "+" + (g.im == 1 ? "i" : to_string(g.im) + "i");
    Rational neg = -g.im;
    return to_string(g.re) + "-" + (neg == 1 ? "i" : to_string(neg) + "i");
}

} // namespace spcert
