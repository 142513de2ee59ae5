// Finite sets A of nonzero complex rationals, with exact sumset and product
// set computation.
#pragma once

#include "spcert/gaussian.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace spcert {

// Distinct nonzero elements in the canonical total order. Zero is rejected at
// construction: the statistics downstream assume 0 is not in A, and dropping
// it silently would corrupt them.
class ComplexSet {
  public:
    static ComplexSet from_elements(std::vector<GaussianRational> elems) {
        for (const auto& e : elems)
            if (e.is_zero())
                throw std::invalid_argument("ComplexSet: zero element rejected");
        std::sort(elems.begin(), elems.end());
        for (std::size_t i = 1; i < elems.size(); ++i)
            if (elems[i - 1] == elems[i])
                throw std::invalid_argument("ComplexSet: duplicate element " +
                                            to_string(elems[i]));
        if (elems.empty())
            throw std::invalid_argument("ComplexSet: empty set");
        ComplexSet s;
        s.elems_ = std::move(elems);
        return s;
    }

    std::size_t size() const { return elems_.size(); }
    const GaussianRational& operator[](std::size_t i) const { return elems_[i]; }
    const std::vector<GaussianRational>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

  private:
    ComplexSet() = default;
    std::vector<GaussianRational> elems_;
};

namespace detail {
inline std::vector<GaussianRational> sorted_unique(std::vector<GaussianRational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}
} // namespace detail

// {a+b : a,b in A}. May contain zero.
inline std::vector<GaussianRational> sumset(const ComplexSet& A) {
    std::vector<GaussianRational> out;
    out.reserve(A.size() * A.size());
    for (const auto& a : A)
        for (const auto& b : A)
            out.push_back(a + b);
    return detail::sorted_unique(std::move(out));
}

// {a*b : a,b in A}. Zero-free since 0 is not in A.
inline std::vector<GaussianRational> productset(const ComplexSet& A) {
    std::vector<GaussianRational> out;
    out.reserve(A.size() * A.size());
    for (const auto& a : A)
        for (const auto& b : A)
            out.push_back(a * b);
    return detail::sorted_unique(std::move(out));
}

} // namespace spcert
