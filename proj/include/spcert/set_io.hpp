// Set-file format: one Gaussian rational per line.
//
//   rat  ::= ['-'] digits ['/' digits]
//   term ::= rat | rat 'i' | 'i'
//   line ::= term | rat ('+'|'-') (rat 'i' | 'i')
//
// '#' begins a comment, blank lines are ignored. Printing uses the canonical
// form emitted by to_string, so parse/print round-trips are exact.
#pragma once

#include "spcert/set.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace spcert {

namespace detail {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    bool eat(char c) {
        if (!done() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

inline BigInt parse_digits(Cursor& cur) {
    std::size_t start = cur.pos;
    while (!cur.done() && cur.peek() >= '0' && cur.peek() <= '9')
        ++cur.pos;
    if (cur.pos == start)
        throw std::invalid_argument("expected digits at column " +
                                    std::to_string(start + 1));
    return BigInt(cur.s.substr(start, cur.pos - start));
}

inline Rational parse_rat(Cursor& cur) {
    bool neg = cur.eat('-');
    BigInt num = parse_digits(cur);
    BigInt den = 1;
    if (cur.eat('/')) {
        den = parse_digits(cur);
        if (den == 0)
            throw std::invalid_argument("zero denominator");
    }
    if (neg)
        num = -num;
    return make_rational(std::move(num), std::move(den));
}

} // namespace detail

inline GaussianRational parse_gaussian(const std::string& text) {
    detail::Cursor cur{text};
    GaussianRational value;
    if (cur.eat('i')) {
        value = gq_i();
    } else {
        Rational first = detail::parse_rat(cur);
        if (cur.done()) {
            value = GaussianRational(std::move(first));
        } else if (cur.eat('i')) {
            value = GaussianRational(Rational(0), std::move(first));
        } else if (cur.peek() == '+' || cur.peek() == '-') {
            bool minus = cur.peek() == '-';
            ++cur.pos;
            Rational second;
            if (cur.eat('i')) {
                second = 1;
            } else {
                second = detail::parse_rat(cur);
                if (!cur.eat('i'))
                    throw std::invalid_argument("expected 'i' at column " +
                                                std::to_string(cur.pos + 1));
            }
            if (minus)
                second = -second;
            value = GaussianRational(std::move(first), std::move(second));
        } else {
            throw std::invalid_argument("unexpected character '" +
                                        std::string(1, cur.peek()) +
                                        "' at column " + std::to_string(cur.pos + 1));
        }
    }
    if (!cur.done())
        throw std::invalid_argument("trailing characters at column " +
                                    std::to_string(cur.pos + 1));
    return value;
}

inline ComplexSet parse_set_file(std::istream& in, const std::string& source) {
    std::vector<GaussianRational> elems;
    std::map<GaussianRational, int> first_line;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos)
            continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        std::string token = line.substr(begin, end - begin + 1);
        GaussianRational value;
        try {
            value = parse_gaussian(token);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(source + ":" + std::to_string(lineno) +
                                        ": " + e.what());
        }
        if (value.is_zero())
            throw std::invalid_argument(source + ":" + std::to_string(lineno) +
                                        ": zero element not allowed");
        if (auto [it, inserted] = first_line.try_emplace(value, lineno); !inserted)
            throw std::invalid_argument(source + ":" + std::to_string(lineno) +
                                        ": duplicate of line " +
                                        std::to_string(it->second) + " (" +
                                        to_string(value) + ")");
        elems.push_back(std::move(value));
    }
    if (elems.empty())
        throw std::invalid_argument(source + ": no elements");
    return ComplexSet::from_elements(std::move(elems));
}

inline void write_set_file(std::ostream& out, const ComplexSet& A,
                           const std::string& comment = {}) {
    if (!comment.empty())
        out << "# " << comment << "\n";
    for (const auto& e : A)
        out << to_string(e) << "\n";
}

} // namespace spcert
