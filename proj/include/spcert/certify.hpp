// End-to-end pipeline: dyadic class selection, hyperplane and hemisphere
// sampling, triangulation, partner assignment, and the candidate injection
// into X+X. Injectivity is never assumed: every vector sum is checked by
// exact equality indexing, and on a global collision the hyperplane is
// resampled with a derived seed. The certificate records success or the last
// failure with its concrete collisions.
#pragma once

#include "spcert/dyadic.hpp"
#include "spcert/sphere.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spcert {

struct TaggedSum {
    Vec4Q sum;
    GaussianRational t, t1;
    Point4 x, x1;
};

// One block of sums per undirected partner edge: a mutual pair t <-> t1 is a
// single edge and is emitted once, with the canonically smaller t first.
inline std::vector<TaggedSum>
build_injection(const std::map<GaussianRational, GaussianRational>& partners,
                const std::map<GaussianRational, PlaneLineData>& plane_data) {
    std::set<std::pair<GaussianRational, GaussianRational>> edges;
    for (const auto& [t, t1] : partners)
        edges.insert(t < t1 ? std::make_pair(t, t1) : std::make_pair(t1, t));
    std::vector<TaggedSum> sums;
    for (const auto& [t, t1] : edges) {
        const auto& left = plane_data.at(t);
        const auto& right = plane_data.at(t1);
        for (const auto& x : left.kept)
            for (const auto& x1 : right.kept)
                sums.push_back({x.coords + x1.coords, t, t1, x, x1});
    }
    return sums;
}

struct Collision {
    TaggedSum first, second; // equal sum values, distinct tags
};

struct InjectivityReport {
    bool within_pair = true; // no collision shares its edge; a theorem given
                             // that the two planes span R^4
    bool global = true;
    BigInt distinct_count;
    std::vector<Collision> collisions;
};

inline InjectivityReport verify_injective(const std::vector<TaggedSum>& sums) {
    struct Vec4Less {
        bool operator()(const Vec4Q& a, const Vec4Q& b) const {
            return lex_less(a, b);
        }
    };
    InjectivityReport report;
    std::map<Vec4Q, std::size_t, Vec4Less> index;
    for (std::size_t i = 0; i < sums.size(); ++i) {
        auto [it, inserted] = index.try_emplace(sums[i].sum, i);
        if (!inserted) {
            const TaggedSum& prev = sums[it->second];
            report.global = false;
            if (prev.t == sums[i].t && prev.t1 == sums[i].t1)
                report.within_pair = false;
            report.collisions.push_back({prev, sums[i]});
        }
    }
    report.distinct_count = index.size();
    return report;
}

struct EdgeSumCount {
    GaussianRational t, t1;
    std::size_t count = 0;
};

struct InjectionCertificate {
    std::size_t set_size = 0;
    std::string element_list_hash;
    std::size_t sumset_size = 0;
    std::size_t productset_size = 0;
    BigInt sumset4_size; // |X+X| = |A+A|^2 exactly
    BigInt energy;
    Rational eq1_lower_bound;
    bool eq1_holds = false;
    int dyadic_class_k = 0;
    std::size_t dyadic_class_size = 0; // |T'|
    BigInt dyadic_class_mass;
    std::vector<GaussianRational> dyadic_members;
    Vec4Q hyperplane_normal;
    int hyperplane_samples = 0; // normals drawn in the recorded attempt
    int attempts = 0;           // pipeline attempts used (1 = no resampling)
    std::size_t hemisphere_size = 0;               // |T''|
    std::vector<GaussianRational> hemisphere_members; // T''
    std::vector<RayDir> rays;                      // one per t in T'
    PlanarGraph graph;                             // triangulation + partners
    std::vector<EdgeSumCount> per_edge_sums;
    BigInt distinct_sum_count; // N
    std::vector<Collision> collisions;
    bool within_pair_injective = true;
    bool globally_injective = true;
    // Paper-style accounting: 32 * class mass <= |X+X|. Reported, not
    // asserted; finite instances routinely fall short of the asymptotic form.
    bool eq4_style_bound = false;
    int log2_floor = 0; // floor(log2 |A|), the rational stand-in for log2 |A|
    // 64 * floor(log2 |A|) * |A+A|^2 * |A.A| >= |A|^4; absent for |A| = 1.
    std::optional<bool> theorem_bound;
    // Report-only decimals; never feed a predicate.
    std::optional<double> effective_constant; // |A+A|^2 |A.A| log2|A| / |A|^4
    std::optional<double> effective_exponent; // log max(|A+A|,|A.A|) / log |A|
    bool degenerate = false; // |Y| <= 1, empty partner map
    std::uint64_t seed = 0;
    int retries = 0;
};

inline InjectionCertificate certify(const ComplexSet& A, std::uint64_t seed,
                                    int retries) {
    if (retries < 1)
        throw std::invalid_argument("certify: retries must be >= 1");
    InjectionCertificate cert;
    cert.seed = seed;
    cert.retries = retries;
    cert.set_size = A.size();
    {
        std::string lines;
        for (const auto& e : A)
            lines += to_string(e) + "\n";
        char buf[32];
        std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                      static_cast<unsigned long long>(fnv1a64(lines)));
        cert.element_list_hash = buf;
    }
    cert.sumset_size = sumset(A).size();
    cert.productset_size = productset(A).size();
    cert.sumset4_size = BigInt(cert.sumset_size) * BigInt(cert.sumset_size);

    DirectionTally tally = direction_tally(A);
    cert.energy = tally.energy;
    CauchySchwarzVerdict cs = cauchy_schwarz_check(tally, A, cert.productset_size);
    cert.eq1_lower_bound = cs.lower_bound;
    cert.eq1_holds = cs.holds;

    ClassSelection sel = select_popular_class(dyadic_decompose(tally), A.size());
    cert.dyadic_class_k = sel.selected.k;
    cert.dyadic_class_size = sel.selected.members.size();
    cert.dyadic_class_mass = sel.selected.mass;
    cert.dyadic_members = sel.selected.members;
    cert.eq4_style_bound = 32 * sel.selected.mass <= cert.sumset4_size;

    cert.log2_floor = floor_log2(A.size());
    if (A.size() >= 2) {
        BigInt n = A.size();
        BigInt lhs = BigInt(64) * cert.log2_floor * BigInt(cert.sumset_size) *
                     BigInt(cert.sumset_size) * BigInt(cert.productset_size);
        cert.theorem_bound = lhs >= n * n * n * n;
        double n4 = std::pow(static_cast<double>(A.size()), 4.0);
        double s2p = static_cast<double>(cert.sumset_size) *
                     static_cast<double>(cert.sumset_size) *
                     static_cast<double>(cert.productset_size);
        cert.effective_constant = s2p * std::log2(static_cast<double>(A.size())) / n4;
        double biggest = static_cast<double>(
            std::max(cert.sumset_size, cert.productset_size));
        cert.effective_exponent =
            std::log(biggest) / std::log(static_cast<double>(A.size()));
    }

    std::vector<Point4> X = embed(A);
    std::vector<PlaneT> planes;
    planes.reserve(cert.dyadic_members.size());
    for (const auto& t : cert.dyadic_members)
        planes.push_back(plane_of(t));
    auto groups = group_by_direction(X, cert.dyadic_members);

    // Genericity failures are measure-zero accidents, unlike sum collisions;
    // give the samplers their own generous budget so a small collision-retry
    // cap cannot starve them.
    const int sampler_budget = std::max(retries, 64);
    for (int attempt = 0; attempt < retries; ++attempt) {
        std::uint64_t hseed = seed + 2 * static_cast<std::uint64_t>(attempt);
        HyperplaneSample hp = sample_hyperplane(planes, X, hseed, sampler_budget);

        std::vector<PlaneLineData> per_plane;
        per_plane.reserve(planes.size());
        std::map<GaussianRational, PlaneLineData> plane_map;
        for (const auto& p : planes) {
            PlaneLineData data = plane_line_data(p, hp.h, groups.at(p.t));
            plane_map[p.t] = data;
            per_plane.push_back(std::move(data));
        }

        std::vector<RayDir> rays = rays_of(per_plane, hp.h);
        HemisphereSample hemi = select_hemisphere(rays, hseed + 1, sampler_budget);

        PlanarGraph graph = triangulate(hemi.chart);
        auto partner = assign_partners(graph, hemi.chart);

        std::vector<TaggedSum> sums = build_injection(partner, plane_map);
        InjectivityReport report = verify_injective(sums);

        cert.hyperplane_normal = hp.h.normal;
        cert.hyperplane_samples = hp.samples;
        cert.attempts = attempt + 1;
        cert.hemisphere_size = hemi.chart.members.size();
        cert.hemisphere_members = hemi.chart.members;
        cert.rays = rays;
        cert.graph = graph;
        cert.per_edge_sums.clear();
        {
            std::set<std::pair<GaussianRational, GaussianRational>> edges;
            for (const auto& [t, t1] : partner)
                edges.insert(t < t1 ? std::make_pair(t, t1)
                                    : std::make_pair(t1, t));
            for (const auto& [t, t1] : edges)
                cert.per_edge_sums.push_back(
                    {t, t1, plane_map.at(t).kept.size() * plane_map.at(t1).kept.size()});
        }
        cert.distinct_sum_count = report.distinct_count;
        cert.collisions = report.collisions;
        cert.within_pair_injective = report.within_pair;
        cert.globally_injective = report.global;
        cert.degenerate = partner.empty();
        if (report.global)
            break;
    }
    return cert;
}

// --- JSON serialization ------------------------------------------------------

namespace detail {

inline nlohmann::ordered_json json_vec4(const Vec4Q& v) {
    return {to_string(v[0]), to_string(v[1]), to_string(v[2]), to_string(v[3])};
}

inline nlohmann::ordered_json json_tag(const TaggedSum& s) {
    nlohmann::ordered_json j;
    j["t"] = to_string(s.t);
    j["t1"] = to_string(s.t1);
    j["x"] = {to_string(s.x.a1), to_string(s.x.a2)};
    j["x1"] = {to_string(s.x1.a1), to_string(s.x1.a2)};
    return j;
}

} // namespace detail

// Rationals serialize as "p/q" strings (integers without the "/q"), vectors
// as arrays of such strings.
inline nlohmann::ordered_json certificate_json(const InjectionCertificate& c) {
    nlohmann::ordered_json j;
    j["input_digest"] = {{"set_size", c.set_size},
                         {"element_list_hash", c.element_list_hash}};
    j["sumset_size"] = c.sumset_size;
    j["productset_size"] = c.productset_size;
    j["sumset4_size"] = c.sumset4_size.str();
    j["energy"] = c.energy.str();
    j["eq1"] = {{"lower_bound", to_string(c.eq1_lower_bound)},
                {"holds", c.eq1_holds}};
    nlohmann::ordered_json members = nlohmann::ordered_json::array();
    for (const auto& t : c.dyadic_members)
        members.push_back(to_string(t));
    j["dyadic"] = {{"class_k", c.dyadic_class_k},
                   {"class_size", c.dyadic_class_size},
                   {"class_mass", c.dyadic_class_mass.str()},
                   {"members", members}};
    j["hyperplane"] = {{"normal", detail::json_vec4(c.hyperplane_normal)},
                       {"samples", c.hyperplane_samples}};
    j["attempts"] = c.attempts;
    j["hemisphere_size"] = c.hemisphere_size;
    nlohmann::ordered_json hemi = nlohmann::ordered_json::array();
    for (const auto& t : c.hemisphere_members)
        hemi.push_back(to_string(t));
    j["hemisphere_members"] = std::move(hemi);
    nlohmann::ordered_json rays = nlohmann::ordered_json::array();
    for (const auto& r : c.rays) {
        nlohmann::ordered_json jr;
        jr["t"] = to_string(r.t);
        jr["dir"] = {to_string(r.dir3[0]), to_string(r.dir3[1]),
                     to_string(r.dir3[2])};
        rays.push_back(std::move(jr));
    }
    j["rays"] = std::move(rays);
    nlohmann::ordered_json graph_edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : c.graph.edges)
        graph_edges.push_back({to_string(a), to_string(b)});
    nlohmann::ordered_json partner = nlohmann::ordered_json::object();
    for (const auto& [t, t1] : c.graph.partner)
        partner[to_string(t)] = to_string(t1);
    j["graph"] = {{"edges", std::move(graph_edges)},
                  {"partner", std::move(partner)}};
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : c.per_edge_sums) {
        nlohmann::ordered_json je;
        je["t"] = to_string(e.t);
        je["t1"] = to_string(e.t1);
        je["count"] = e.count;
        edges.push_back(std::move(je));
    }
    j["per_edge_sums"] = std::move(edges);
    j["distinct_sum_count"] = c.distinct_sum_count.str();
    nlohmann::ordered_json collisions = nlohmann::ordered_json::array();
    for (const auto& col : c.collisions) {
        nlohmann::ordered_json jc;
        jc["sum"] = detail::json_vec4(col.first.sum);
        jc["first"] = detail::json_tag(col.first);
        jc["second"] = detail::json_tag(col.second);
        collisions.push_back(std::move(jc));
    }
    j["collisions"] = std::move(collisions);
    j["within_pair_injective"] = c.within_pair_injective;
    j["globally_injective"] = c.globally_injective;
    j["eq4_style_bound"] = c.eq4_style_bound;
    j["log2_floor"] = c.log2_floor;
    if (c.theorem_bound)
        j["theorem_bound"] = *c.theorem_bound;
    else
        j["theorem_bound"] = nullptr;
    if (c.effective_constant)
        j["effective_constant"] = *c.effective_constant;
    else
        j["effective_constant"] = nullptr;
    if (c.effective_exponent)
        j["effective_exponent"] = *c.effective_exponent;
    else
        j["effective_exponent"] = nullptr;
    j["degenerate"] = c.degenerate;
    j["seed"] = c.seed;
    j["retries"] = c.retries;
    return j;
}

inline std::string certificate_to_string(const InjectionCertificate& c) {
    return certificate_json(c).dump(2) + "\n";
}

} // namespace spcert
