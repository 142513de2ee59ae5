// The geometric half of the pipeline, second part. Ray directions live in the
// 3-dimensional coordinate space of H. An open hemisphere {d : u.d > 0} is
// sampled to capture at least half of the rays; its members are charted by
// central (gnomonic) projection onto the plane u.x = 1, which maps great
// circles to straight lines with purely rational formulas. The charted points
// are triangulated into a planar connected graph and each vertex is assigned
// an edge partner.
//
// The gnomonic chart replaces stereographic projection deliberately: it keeps
// every hull/crossing predicate exact, and planarity plus the hull structure
// are all the construction needs.
#pragma once

#include "spcert/geom4.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spcert {

struct RayDir {
    GaussianRational t;
    Vec3Q dir3; // nonzero, identified up to positive scaling
};

inline Vec3Q drop_coordinate(const Vec4Q& v, std::size_t pivot) {
    Vec3Q out;
    std::size_t k = 0;
    for (std::size_t i = 0; i < 4; ++i)
        if (i != pivot)
            out[k++] = v[i];
    return out;
}

// Ray directions in the rational basis of H chosen by hyperplane_from_normal:
// the coordinates of ray_sign * line_dir are just the non-pivot components.
inline std::vector<RayDir> rays_of(const std::vector<PlaneLineData>& planes,
                                   const Hyperplane& h) {
    std::vector<RayDir> rays;
    rays.reserve(planes.size());
    for (const auto& p : planes) {
        Vec4Q d = (p.ray_sign > 0) ? p.line_dir : -p.line_dir;
        RayDir r{p.t, drop_coordinate(d, h.pivot)};
        if (r.dir3.is_zero())
            throw std::logic_error("rays_of: zero ray direction");
        rays.push_back(std::move(r));
    }
    return rays;
}

struct HemisphereChart {
    Vec3Q pole;                   // u; members satisfy u.dir3 > 0 strictly
    std::array<Vec3Q, 2> basis2;  // rational basis of u^perp
    std::vector<GaussianRational> members;
    std::map<GaussianRational, Vec2Q> chart;
};

// Builds the chart for a candidate pole, flipping to -u when the strict
// majority of rays points the other way (a tie keeps u). Returns nothing if
// some ray is orthogonal to u.
inline std::optional<HemisphereChart> hemisphere_with_pole(
    const std::vector<RayDir>& rays, Vec3Q u) {
    std::size_t positives = 0;
    for (const auto& r : rays) {
        int s = dot(u, r.dir3).sign();
        if (s == 0)
            return std::nullopt;
        if (s > 0)
            ++positives;
    }
    if (2 * positives < rays.size())
        u = -u;

    HemisphereChart out;
    std::size_t k = 0;
    while (u[k] == 0)
        ++k;
    std::size_t slot = 0;
    for (std::size_t j = 0; j < 3; ++j) {
        if (j == k) continue;
        Vec3Q v;
        v[j] = 1;
        v[k] = -u[j] / u[k];
        out.basis2[slot++] = v;
    }
    for (const auto& r : rays) {
        Rational ud = dot(u, r.dir3);
        if (ud > 0) {
            out.members.push_back(r.t);
            out.chart[r.t] = Vec2Q{dot(out.basis2[0], r.dir3) / ud,
                                   dot(out.basis2[1], r.dir3) / ud};
        }
    }
    std::sort(out.members.begin(), out.members.end());
    out.pole = std::move(u);

    // Distinct rays in an open hemisphere chart to distinct points; a clash
    // means the upstream line-distinctness predicate was violated.
    std::vector<Vec2Q> pts;
    pts.reserve(out.chart.size());
    for (const auto& [t, p] : out.chart)
        pts.push_back(p);
    std::sort(pts.begin(), pts.end(),
              [](const Vec2Q& a, const Vec2Q& b) { return lex_less(a, b); });
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (pts[i - 1] == pts[i])
            throw std::logic_error("hemisphere chart: coincident chart points");
    return out;
}

struct HemisphereSample {
    HemisphereChart chart;
    int samples = 0;
};

inline HemisphereSample select_hemisphere(const std::vector<RayDir>& rays,
                                          std::uint64_t seed, int retries) {
    if (rays.empty())
        throw std::invalid_argument("select_hemisphere: no rays");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::int64_t box = 8LL << std::min(attempt / 4, 40);
        Vec3Q u;
        for (std::size_t i = 0; i < 3; ++i)
            u[i] = Rational(draw_int(rng, -box, box));
        if (u.is_zero())
            continue;
        if (auto chart = hemisphere_with_pole(rays, std::move(u)))
            return {std::move(*chart), attempt + 1};
    }
    throw GenericityExhausted("select_hemisphere: no admissible pole in " +
                              std::to_string(retries) + " samples");
}

// The chart is faithful: three member rays are coplanar (det3 = 0) exactly
// when their chart points are collinear. Returns both booleans.
inline std::pair<bool, bool> coplanar_iff_collinear_check(
    const RayDir& r1, const RayDir& r2, const RayDir& r3,
    const HemisphereChart& chart) {
    bool coplanar = det3(r1.dir3, r2.dir3, r3.dir3) == 0;
    bool collinear = orient2(chart.chart.at(r1.t), chart.chart.at(r2.t),
                             chart.chart.at(r3.t)) == 0;
    return {coplanar, collinear};
}

struct PlanarGraph {
    std::vector<GaussianRational> vertices;
    // Unordered pairs, stored with the canonically smaller t first.
    std::vector<std::pair<GaussianRational, GaussianRational>> edges;
    std::map<GaussianRational, GaussianRational> partner;
};

namespace detail {

// Triangulates distinct 2-d points: a path when all are collinear, otherwise
// an incremental convex-hull triangulation. Points are inserted in
// lexicographic order, so every new point is strictly outside the current
// hull and connects to its strictly visible hull edges. Flat (collinear)
// hull vertices are kept on the chain, which stops edges from skipping over
// them. Returns index pairs (i < j).
inline std::set<std::pair<std::size_t, std::size_t>>
triangulate_points(const std::vector<Vec2Q>& pts) {
    const std::size_t n = pts.size();
    std::set<std::pair<std::size_t, std::size_t>> edges;
    auto add_edge = [&edges](std::size_t a, std::size_t b) {
        edges.insert({std::min(a, b), std::max(a, b)});
    };
    if (n <= 1)
        return edges;

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&pts](std::size_t a, std::size_t b) {
        return lex_less(pts[a], pts[b]);
    });
    const auto at = [&](std::size_t rank) -> const Vec2Q& {
        return pts[order[rank]];
    };

    std::size_t m = 2;
    while (m < n && orient2(at(0), at(1), at(m)) == 0)
        ++m;
    if (m == n) {
        // All collinear: a path in coordinate order.
        for (std::size_t i = 0; i + 1 < n; ++i)
            add_edge(order[i], order[i + 1]);
        return edges;
    }

    // Fan the collinear prefix onto the first off-line point.
    for (std::size_t i = 0; i + 1 < m; ++i) {
        add_edge(order[i], order[i + 1]);
        add_edge(order[i], order[m]);
    }
    add_edge(order[m - 1], order[m]);

    std::vector<std::size_t> hull; // ranks, counterclockwise
    if (orient2(at(0), at(m - 1), at(m)) > 0) {
        for (std::size_t i = 0; i < m; ++i)
            hull.push_back(i);
    } else {
        for (std::size_t i = m; i-- > 0;)
            hull.push_back(i);
    }
    hull.push_back(m);

    for (std::size_t q = m + 1; q < n; ++q) {
        const std::size_t h = hull.size();
        std::vector<bool> visible(h);
        bool any_visible = false, any_hidden = false;
        for (std::size_t j = 0; j < h; ++j) {
            visible[j] = orient2(at(hull[j]), at(hull[(j + 1) % h]), at(q)) < 0;
            any_visible |= visible[j];
            any_hidden |= !visible[j];
        }
        if (!any_visible || !any_hidden)
            throw std::logic_error("triangulate: point not strictly outside hull");

        std::size_t run_start = h;
        for (std::size_t j = 0; j < h; ++j) {
            if (visible[j] && !visible[(j + h - 1) % h]) {
                run_start = j;
                break;
            }
        }
        std::size_t run_len = 0;
        while (visible[(run_start + run_len) % h])
            ++run_len;

        for (std::size_t j = 0; j < run_len; ++j) {
            std::size_t e = (run_start + j) % h;
            add_edge(order[hull[e]], order[q]);
            add_edge(order[hull[(e + 1) % h]], order[q]);
        }

        std::vector<std::size_t> next_hull;
        next_hull.reserve(h - run_len + 2);
        // Keep the invisible arc from the end of the run back to its start.
        for (std::size_t j = 0; j <= h - run_len; ++j)
            next_hull.push_back(hull[(run_start + run_len + j) % h]);
        next_hull.push_back(q);
        hull = std::move(next_hull);
    }
    return edges;
}

} // namespace detail

// Planar connected graph on the chart points: path when collinear, hull
// triangulation otherwise; at least |Y|-1 edges either way.
inline PlanarGraph triangulate(const HemisphereChart& chart) {
    if (chart.members.empty())
        throw std::invalid_argument("triangulate: empty chart");
    PlanarGraph g;
    g.vertices = chart.members;
    std::vector<Vec2Q> pts;
    pts.reserve(chart.members.size());
    for (const auto& t : chart.members)
        pts.push_back(chart.chart.at(t));
    for (const auto& [i, j] : detail::triangulate_points(pts)) {
        GaussianRational a = chart.members[i];
        GaussianRational b = chart.members[j];
        if (b < a)
            std::swap(a, b);
        g.edges.emplace_back(std::move(a), std::move(b));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

// Partner of each vertex: the edge neighbor whose chart point is
// lexicographically smallest. Empty map for a single vertex.
inline std::map<GaussianRational, GaussianRational>
assign_partners(PlanarGraph& g, const HemisphereChart& chart) {
    std::map<GaussianRational, std::vector<GaussianRational>> adjacency;
    for (const auto& [a, b] : g.edges) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    g.partner.clear();
    for (const auto& [v, neighbors] : adjacency) {
        const GaussianRational* best = &neighbors[0];
        for (const auto& nb : neighbors)
            if (lex_less(chart.chart.at(nb), chart.chart.at(*best)))
                best = &nb;
        g.partner[v] = *best;
    }
    return g.partner;
}

// --- exact audit predicates -------------------------------------------------

inline bool on_segment(const Vec2Q& p, const Vec2Q& a, const Vec2Q& b) {
    if (orient2(a, b, p) != 0)
        return false;
    auto within = [](const Rational& x, const Rational& lo, const Rational& hi) {
        return (lo <= hi) ? (lo <= x && x <= hi) : (hi <= x && x <= lo);
    };
    return within(p[0], a[0], b[0]) && within(p[1], a[1], b[1]);
}

// Closed segments [a,b] and [c,d] share a point that is not a common
// endpoint: a proper crossing, an endpoint inside the other segment, or a
// collinear overlap.
inline bool segments_conflict(const Vec2Q& a, const Vec2Q& b,
                              const Vec2Q& c, const Vec2Q& d) {
    int d1 = orient2(c, d, a), d2 = orient2(c, d, b);
    int d3 = orient2(a, b, c), d4 = orient2(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    auto endpoint_inside = [](const Vec2Q& p, const Vec2Q& s0, const Vec2Q& s1) {
        return on_segment(p, s0, s1) && p != s0 && p != s1;
    };
    return endpoint_inside(a, c, d) || endpoint_inside(b, c, d) ||
           endpoint_inside(c, a, b) || endpoint_inside(d, a, b);
}

inline bool crossing_free(const PlanarGraph& g, const HemisphereChart& chart) {
    const auto& pt = chart.chart;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
            if (segments_conflict(pt.at(g.edges[i].first), pt.at(g.edges[i].second),
                                  pt.at(g.edges[j].first), pt.at(g.edges[j].second)))
                return false;
        }
        // No vertex may sit in the interior of an edge either.
        for (const auto& v : g.vertices) {
            if (v == g.edges[i].first || v == g.edges[i].second)
                continue;
            if (on_segment(pt.at(v), pt.at(g.edges[i].first), pt.at(g.edges[i].second)))
                return false;
        }
    }
    return true;
}

inline bool graph_connected(const PlanarGraph& g) {
    if (g.vertices.empty())
        return false;
    std::map<GaussianRational, std::vector<GaussianRational>> adjacency;
    for (const auto& [a, b] : g.edges) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    std::set<GaussianRational> seen;
    std::vector<GaussianRational> stack{g.vertices[0]};
    seen.insert(g.vertices[0]);
    while (!stack.empty()) {
        GaussianRational v = stack.back();
        stack.pop_back();
        for (const auto& nb : adjacency[v])
            if (seen.insert(nb).second)
                stack.push_back(nb);
    }
    return seen.size() == g.vertices.size();
}

} // namespace spcert
