#include "spcert/certify.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spcert;
using spcert::testing::gq;
using spcert::testing::set_of;

namespace {

Vec4Q v4(long a, long b, long c, long d) {
    return Vec4Q{Rational(a), Rational(b), Rational(c), Rational(d)};
}

PlaneLineData kept_only(const GaussianRational& t, std::vector<Point4> kept) {
    PlaneLineData data;
    data.t = t;
    data.kept = std::move(kept);
    return data;
}

Point4 pt(long a, long b, long c, long d, const char* a1, const char* a2) {
    return Point4{v4(a, b, c, d), gq(a1), gq(a2)};
}

} // namespace

TEST_CASE("build_injection") {
    SECTION("single pair, single sum") {
        std::map<GaussianRational, PlaneLineData> data;
        data[gq("1")] = kept_only(gq("1"), {pt(1, 0, 1, 0, "1", "1")});
        data[gq("i")] = kept_only(gq("i"), {pt(0, 1, 1, 0, "i", "1")});
        std::map<GaussianRational, GaussianRational> partner{{gq("1"), gq("i")},
                                                             {gq("i"), gq("1")}};
        auto sums = build_injection(partner, data);
        REQUIRE(sums.size() == 1); // the mutual pair is one undirected edge
        REQUIRE(sums[0].sum == v4(1, 1, 2, 0));
    }
    SECTION("2 x 3 kept points emit 6 sums") {
        std::map<GaussianRational, PlaneLineData> data;
        data[gq("2")] = kept_only(
            gq("2"), {pt(2, 0, 1, 0, "2", "1"), pt(4, 0, 2, 0, "4", "2")});
        data[gq("3")] = kept_only(gq("3"), {pt(3, 0, 1, 0, "3", "1"),
                                            pt(6, 0, 2, 0, "6", "2"),
                                            pt(9, 0, 3, 0, "9", "3")});
        std::map<GaussianRational, GaussianRational> partner{{gq("2"), gq("3")}};
        REQUIRE(build_injection(partner, data).size() == 6);
    }
    SECTION("empty partner map") {
        REQUIRE(build_injection({}, {}).empty());
    }
}

TEST_CASE("verify_injective") {
    SECTION("single sum passes") {
        std::vector<TaggedSum> sums = {
            {v4(1, 1, 2, 0), gq("1"), gq("i"), pt(1, 0, 1, 0, "1", "1"),
             pt(0, 1, 1, 0, "i", "1")}};
        auto report = verify_injective(sums);
        REQUIRE(report.global);
        REQUIRE(report.within_pair);
        REQUIRE(report.collisions.empty());
        REQUIRE(report.distinct_count == 1);
    }
    SECTION("artificial duplicate is caught with its pair") {
        TaggedSum s{v4(1, 1, 2, 0), gq("1"), gq("i"), pt(1, 0, 1, 0, "1", "1"),
                    pt(0, 1, 1, 0, "i", "1")};
        auto report = verify_injective({s, s});
        REQUIRE_FALSE(report.global);
        REQUIRE_FALSE(report.within_pair); // same edge tag
        REQUIRE(report.collisions.size() == 1);
        REQUIRE(report.collisions[0].first.sum == report.collisions[0].second.sum);
        REQUIRE(report.distinct_count == 1);
    }
    SECTION("cross-pair duplicate keeps within-pair intact") {
        TaggedSum s1{v4(1, 1, 2, 0), gq("1"), gq("i"), pt(1, 0, 1, 0, "1", "1"),
                     pt(0, 1, 1, 0, "i", "1")};
        TaggedSum s2 = s1;
        s2.t = gq("2");
        auto report = verify_injective({s1, s2});
        REQUIRE_FALSE(report.global);
        REQUIRE(report.within_pair);
    }
    SECTION("spanning planes give 4 distinct sums from 2 x 2 kept points") {
        std::map<GaussianRational, PlaneLineData> data;
        data[gq("1")] = kept_only(
            gq("1"), {pt(1, 0, 1, 0, "1", "1"), pt(2, 0, 2, 0, "2", "2")});
        data[gq("i")] = kept_only(
            gq("i"), {pt(0, 1, 1, 0, "i", "1"), pt(0, 2, 2, 0, "2i", "2")});
        std::map<GaussianRational, GaussianRational> partner{{gq("1"), gq("i")}};
        auto sums = build_injection(partner, data);
        REQUIRE(sums.size() == 4);
        auto report = verify_injective(sums);
        REQUIRE(report.global);
        REQUIRE(report.within_pair);
        REQUIRE(report.distinct_count == 4);
    }
}

TEST_CASE("vector sumset size equals |A+A|^2") {
    for (const ComplexSet& A : {set_of({"1", "2", "3"}), set_of({"1", "i"})}) {
        auto X = embed(A);
        std::vector<Vec4Q> sums;
        for (const auto& x : X)
            for (const auto& y : X)
                sums.push_back(x.coords + y.coords);
        std::sort(sums.begin(), sums.end(),
                  [](const Vec4Q& a, const Vec4Q& b) { return lex_less(a, b); });
        sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
        std::size_t s = sumset(A).size();
        REQUIRE(sums.size() == s * s);
    }
}

TEST_CASE("certificate for the singleton set is degenerate") {
    auto cert = certify(set_of({"1"}), 1, 8);
    REQUIRE(cert.set_size == 1);
    REQUIRE(cert.degenerate);
    REQUIRE(cert.globally_injective);
    REQUIRE(cert.within_pair_injective);
    REQUIRE(cert.distinct_sum_count == 0);
    REQUIRE(cert.eq1_holds);
    REQUIRE_FALSE(cert.theorem_bound.has_value()); // log 1 = 0, skipped
    REQUIRE_FALSE(cert.effective_exponent.has_value());
}

TEST_CASE("certificate values for {1,2,3}") {
    auto cert = certify(set_of({"1", "2", "3"}), 1, 16);
    REQUIRE(cert.sumset_size == 5);
    REQUIRE(cert.productset_size == 6);
    REQUIRE(cert.sumset4_size == 25);
    REQUIRE(cert.energy == 15);
    REQUIRE(cert.eq1_lower_bound == Rational(27, 2));
    REQUIRE(cert.eq1_holds);
    REQUIRE(cert.dyadic_class_k == 1);
    REQUIRE(cert.dyadic_members == std::vector{gq("1")});
    REQUIRE(cert.theorem_bound.has_value());
    REQUIRE(*cert.theorem_bound); // 64 * 1 * 150 >= 81
    REQUIRE(cert.eq4_style_bound == false); // 32 * 9 > 25
    REQUIRE(*cert.effective_exponent ==
            Catch::Approx(std::log(6.0) / std::log(3.0)));
}

TEST_CASE("ap(16) certificate") {
    auto cert = certify(make_ap(16), 1, 32);
    REQUIRE(cert.sumset_size == 31); // arithmetic progression: 2|A| - 1
    REQUIRE(cert.sumset4_size == 961);
    REQUIRE(cert.globally_injective);
    REQUIRE(cert.distinct_sum_count <= cert.sumset4_size);
    // the diagonal class dominates an AP, so the run is degenerate
    REQUIRE(cert.dyadic_members == std::vector{gq("1")});
    REQUIRE(cert.degenerate);
}

TEST_CASE("full pipeline on a geometric progression") {
    ComplexSet A = make_gp(6, gq("2"));
    auto cert = certify(A, 1, 32);
    REQUIRE_FALSE(cert.degenerate);
    REQUIRE(cert.globally_injective);
    REQUIRE(cert.within_pair_injective);
    REQUIRE(cert.dyadic_class_size == 5);
    REQUIRE(cert.hemisphere_size >= (cert.dyadic_class_size + 1) / 2);
    BigInt edge_total = 0;
    for (const auto& e : cert.per_edge_sums)
        edge_total += e.count;
    REQUIRE(cert.distinct_sum_count == edge_total); // injective => N = sum
    REQUIRE(cert.distinct_sum_count <= cert.sumset4_size);
    REQUIRE(cert.attempts >= 1);
}

TEST_CASE("retry loop recovers from collisions") {
    // gp(16, 2) with seed 0 needs more than one hyperplane before the sums
    // separate; the certificate must still come out injective.
    ComplexSet A = make_gp(16, gq("2"));
    auto cert = certify(A, 0, 32);
    REQUIRE(cert.attempts > 1);
    REQUIRE(cert.globally_injective);
    REQUIRE(cert.within_pair_injective);
    REQUIRE(cert.distinct_sum_count <= cert.sumset4_size);
}

TEST_CASE("failure certificates list concrete collisions") {
    // With a single attempt allowed, the gp(16, 2) seed-0 run above must
    // report its collision instead of resampling.
    ComplexSet A = make_gp(16, gq("2"));
    auto cert = certify(A, 0, 1);
    REQUIRE_FALSE(cert.globally_injective);
    REQUIRE_FALSE(cert.collisions.empty());
    for (const auto& col : cert.collisions) {
        REQUIRE(col.first.sum == col.second.sum);
        REQUIRE(col.first.x.coords + col.first.x1.coords == col.first.sum);
        REQUIRE(col.second.x.coords + col.second.x1.coords == col.second.sum);
        bool same_edge = col.first.t == col.second.t && col.first.t1 == col.second.t1;
        REQUIRE_FALSE(same_edge); // within-pair collisions cannot happen
    }
    REQUIRE(cert.within_pair_injective);
}

TEST_CASE("certificates are deterministic") {
    ComplexSet A = make_gp(8, gq("2"));
    auto a = certificate_to_string(certify(A, 17, 32));
    auto b = certificate_to_string(certify(A, 17, 32));
    REQUIRE(a == b);
    auto c = certificate_to_string(certify(A, 18, 32));
    REQUIRE(a != c); // different seed shows up in the record
}

TEST_CASE("theorem bound is monotone under the stronger floor check") {
    std::mt19937_64 rng(79);
    for (int i = 0; i < 25; ++i) {
        ComplexSet A = make_random(2 + draw_below(rng, 12), 6, rng());
        auto cert = certify(A, rng(), 32);
        REQUIRE(cert.theorem_bound.has_value());
        REQUIRE(*cert.theorem_bound);
        REQUIRE(cert.eq1_holds);
        REQUIRE(cert.within_pair_injective);
    }
}
