// The geometric half of the pipeline, first part: embed A x A into R^4, turn
// each direction t into the two-plane pi_t = {(t z, z) : z in C}, sample an
// integer-normal hyperplane H satisfying all genericity predicates, intersect
// each plane with H to get a line, and keep the majority half of each plane's
// points relative to that line.
#pragma once

#include "spcert/energy.hpp"
#include "spcert/linalg.hpp"
#include "spcert/rng.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spcert {

struct Point4 {
    Vec4Q coords; // (Re a1, Im a1, Re a2, Im a2)
    GaussianRational a1, a2;
};

inline Vec4Q embed_pair(const GaussianRational& a1, const GaussianRational& a2) {
    Vec4Q v;
    v[0] = a1.re;
    v[1] = a1.im;
    v[2] = a2.re;
    v[3] = a2.im;
    return v;
}

// All |A|^2 ordered pairs, iterated in canonical element order.
inline std::vector<Point4> embed(const ComplexSet& A) {
    std::vector<Point4> X;
    X.reserve(A.size() * A.size());
    for (const auto& a1 : A)
        for (const auto& a2 : A)
            X.push_back({embed_pair(a1, a2), a1, a2});
    return X;
}

struct PlaneT {
    GaussianRational t;
    Vec4Q basis1; // embedding of (t, 1)
    Vec4Q basis2; // embedding of (i t, i)
};

inline PlaneT plane_of(const GaussianRational& t) {
    if (t.is_zero())
        throw std::domain_error("plane_of: t must be nonzero");
    PlaneT p;
    p.t = t;
    p.basis1 = embed_pair(t, GaussianRational(1));
    p.basis2 = embed_pair(gq_i() * t, gq_i());
    return p;
}

// Point (a1, a2) lies on pi_t iff a1 = t * a2.
inline bool on_plane(const PlaneT& p, const Point4& x) {
    return x.a1 == p.t * x.a2;
}

// Any two planes with distinct t span R^4; det of the stacked bases is the
// exact witness.
inline bool spans_r4(const PlaneT& p, const PlaneT& q) {
    return det4(p.basis1, p.basis2, q.basis1, q.basis2) != 0;
}

struct Hyperplane {
    Vec4Q normal;                // nonzero, integer entries
    std::array<Vec4Q, 3> basis;  // rational basis of normal^perp
    std::size_t pivot = 0;       // coordinate eliminated by the basis
};

// Basis of n^perp by eliminating the first nonzero coordinate k of n:
// v_j = e_j - (n_j / n_k) e_k for j != k. A vector d with d.n = 0 then has
// coordinates (d_j)_{j != k} in this basis.
inline Hyperplane hyperplane_from_normal(Vec4Q n) {
    if (n.is_zero())
        throw std::invalid_argument("hyperplane_from_normal: zero normal");
    Hyperplane h;
    std::size_t k = 0;
    while (n[k] == 0)
        ++k;
    h.pivot = k;
    std::size_t out = 0;
    for (std::size_t j = 0; j < 4; ++j) {
        if (j == k) continue;
        Vec4Q v;
        v[j] = 1;
        v[k] = -n[j] / n[k];
        h.basis[out++] = v;
    }
    h.normal = std::move(n);
    return h;
}

// x = x_par + x_perp with x_perp parallel to the normal; both exact.
inline Vec4Q project_onto(const Hyperplane& h, const Vec4Q& x) {
    Rational scale = dot(x, h.normal) / dot(h.normal, h.normal);
    return x - scale * h.normal;
}

// Direction of pi_t n H: with s1 = basis1.n and s2 = basis2.n, the combination
// s2*basis1 - s1*basis2 kills the normal component. Nonzero unless the plane
// is contained in H.
inline Vec4Q intersection_direction(const PlaneT& p, const Hyperplane& h) {
    Rational s1 = dot(p.basis1, h.normal);
    Rational s2 = dot(p.basis2, h.normal);
    return s2 * p.basis1 - s1 * p.basis2;
}

// Groups points by their direction a1/a2, restricted to the given t keys.
inline std::map<GaussianRational, std::vector<Point4>>
group_by_direction(const std::vector<Point4>& X,
                   const std::vector<GaussianRational>& keys) {
    std::map<GaussianRational, std::vector<Point4>> groups;
    for (const auto& t : keys)
        groups[t];
    for (const auto& x : X) {
        auto it = groups.find(gq_div(x.a1, x.a2));
        if (it != groups.end())
            it->second.push_back(x);
    }
    return groups;
}

// Empty string when H is generic for (planes, X); otherwise a description of
// the first failed predicate:
//  (i)   no plane is contained in H (transversality),
//  (ii)  the projections x_par are nonzero and pairwise distinct over X,
//  (iii) the lines pi_t n H are pairwise distinct,
//  (iv)  within each plane, the coordinates of its points along the line
//        direction are nonzero and pairwise distinct.
inline std::string genericity_failure(const Hyperplane& h,
                                      const std::vector<PlaneT>& planes,
                                      const std::vector<Point4>& X) {
    for (const auto& p : planes) {
        if (dot(p.basis1, h.normal) == 0 && dot(p.basis2, h.normal) == 0)
            return "plane t=" + to_string(p.t) + " contained in H";
    }

    std::vector<Vec4Q> projections;
    projections.reserve(X.size());
    for (const auto& x : X) {
        Vec4Q par = project_onto(h, x.coords);
        if (par.is_zero())
            return "projection of (" + to_string(x.a1) + "," + to_string(x.a2) +
                   ") is zero";
        projections.push_back(std::move(par));
    }
    std::sort(projections.begin(), projections.end(),
              [](const Vec4Q& a, const Vec4Q& b) { return lex_less(a, b); });
    for (std::size_t i = 1; i < projections.size(); ++i)
        if (projections[i - 1] == projections[i])
            return "two points share a projection onto H";

    std::vector<Vec4Q> dirs;
    dirs.reserve(planes.size());
    for (const auto& p : planes)
        dirs.push_back(intersection_direction(p, h));
    for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j)
            if (proportional(dirs[i], dirs[j]))
                return "lines for t=" + to_string(planes[i].t) + " and t=" +
                       to_string(planes[j].t) + " coincide";

    auto groups = group_by_direction(X, [&] {
        std::vector<GaussianRational> keys;
        keys.reserve(planes.size());
        for (const auto& p : planes)
            keys.push_back(p.t);
        return keys;
    }());
    for (std::size_t i = 0; i < planes.size(); ++i) {
        const auto& pts = groups[planes[i].t];
        Rational dd = dot(dirs[i], dirs[i]);
        std::vector<Rational> coords;
        coords.reserve(pts.size());
        for (const auto& x : pts) {
            Rational c = dot(x.coords, dirs[i]) / dd;
            if (c == 0)
                return "point on plane t=" + to_string(planes[i].t) +
                       " has zero line coordinate";
            coords.push_back(std::move(c));
        }
        std::sort(coords.begin(), coords.end());
        for (std::size_t j = 1; j < coords.size(); ++j)
            if (coords[j - 1] == coords[j])
                return "two points on plane t=" + to_string(planes[i].t) +
                       " share a line coordinate";
    }
    return {};
}

struct GenericityExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HyperplaneSample {
    Hyperplane h;
    int samples = 0; // normals drawn, including the successful one
};

// Integer normals drawn from [-M, M]^4 with M doubling every few samples.
// Each predicate excludes a measure-zero set, so failures die out fast as the
// box grows; the cap exists only to bound pathological runs.
inline HyperplaneSample sample_hyperplane(const std::vector<PlaneT>& planes,
                                          const std::vector<Point4>& X,
                                          std::uint64_t seed, int retries) {
    if (planes.empty())
        throw std::invalid_argument("sample_hyperplane: no planes");
    std::mt19937_64 rng(seed);
    std::string last_failure = "no samples drawn";
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::int64_t box = 8LL << std::min(attempt / 4, 40);
        Vec4Q n;
        for (std::size_t i = 0; i < 4; ++i)
            n[i] = Rational(draw_int(rng, -box, box));
        if (n.is_zero())
            continue;
        Hyperplane h = hyperplane_from_normal(std::move(n));
        last_failure = genericity_failure(h, planes, X);
        if (last_failure.empty())
            return {std::move(h), attempt + 1};
    }
    throw GenericityExhausted("sample_hyperplane: no generic hyperplane in " +
                              std::to_string(retries) + " samples; last: " +
                              last_failure);
}

struct PlaneLineData {
    GaussianRational t;
    Vec4Q line_dir; // spans pi_t n H
    std::vector<std::pair<Point4, Rational>> signed_coords;
    std::vector<Point4> kept; // majority side, at least ceil(nu(t)/2) points
    int ray_sign = 1;
};

// Coordinatizes the plane's points along the line pi_t n H and keeps the
// majority sign; a tie keeps the positive side. Assumes H already passed the
// genericity predicates for this plane.
inline PlaneLineData plane_line_data(const PlaneT& plane, const Hyperplane& h,
                                     const std::vector<Point4>& points_on_plane) {
    PlaneLineData out;
    out.t = plane.t;
    out.line_dir = intersection_direction(plane, h);
    Rational dd = dot(out.line_dir, out.line_dir);
    std::size_t positives = 0;
    for (const auto& x : points_on_plane) {
        Rational c = dot(x.coords, out.line_dir) / dd;
        if (c > 0)
            ++positives;
        out.signed_coords.emplace_back(x, std::move(c));
    }
    out.ray_sign = (2 * positives >= points_on_plane.size()) ? 1 : -1;
    for (const auto& [x, c] : out.signed_coords)
        if ((out.ray_sign > 0) == (c > 0))
            out.kept.push_back(x);
    return out;
}

} // namespace spcert
