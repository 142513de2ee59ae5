#include "spcert/energy.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spcert;
using spcert::testing::gq;
using spcert::testing::set_of;

namespace {

std::vector<GaussianRational> values(std::initializer_list<const char*> items) {
    std::vector<GaussianRational> v;
    for (const char* s : items)
        v.push_back(gq(s));
    std::sort(v.begin(), v.end());
    return v;
}

std::int64_t nu_of(const DirectionTally& tally, const char* t) {
    auto it = tally.nu.find(gq(t));
    return it == tally.nu.end() ? 0 : it->second;
}

} // namespace

TEST_CASE("set construction rejects zero, duplicates, empty") {
    REQUIRE_THROWS_AS(set_of({"1", "0"}), std::invalid_argument);
    REQUIRE_THROWS_AS(set_of({"1", "2", "1"}), std::invalid_argument);
    REQUIRE_THROWS_AS(ComplexSet::from_elements({}), std::invalid_argument);
    REQUIRE(set_of({"3", "1", "2"}).size() == 3);
}

TEST_CASE("sumset examples") {
    REQUIRE(sumset(set_of({"1"})) == values({"2"}));
    REQUIRE(sumset(set_of({"1", "2", "3"})) == values({"2", "3", "4", "5", "6"}));
    REQUIRE(sumset(set_of({"1", "i"})) == values({"2", "1+i", "2i"}));
}

TEST_CASE("productset examples") {
    REQUIRE(productset(set_of({"1", "2", "3"})) ==
            values({"1", "2", "3", "4", "6", "9"}));
    REQUIRE(productset(set_of({"1", "i"})) == values({"1", "i", "-1"}));
    REQUIRE(productset(set_of({"1"})) == values({"1"}));
}

TEST_CASE("direction tally examples") {
    SECTION("{1,2,3}") {
        DirectionTally tally = direction_tally(set_of({"1", "2", "3"}));
        REQUIRE(nu_of(tally, "1") == 3);
        for (const char* t : {"2", "1/2", "3", "1/3", "3/2", "2/3"})
            REQUIRE(nu_of(tally, t) == 1);
        REQUIRE(tally.nu.size() == 7);
        REQUIRE(tally.energy == 15);
    }
    SECTION("{1,2,4}") {
        DirectionTally tally = direction_tally(set_of({"1", "2", "4"}));
        REQUIRE(nu_of(tally, "1") == 3);
        REQUIRE(nu_of(tally, "2") == 2);
        REQUIRE(nu_of(tally, "1/2") == 2);
        REQUIRE(nu_of(tally, "4") == 1);
        REQUIRE(nu_of(tally, "1/4") == 1);
        REQUIRE(tally.energy == 19);
    }
    SECTION("{1,i}") {
        DirectionTally tally = direction_tally(set_of({"1", "i"}));
        REQUIRE(nu_of(tally, "1") == 2);
        REQUIRE(nu_of(tally, "i") == 1);
        REQUIRE(nu_of(tally, "-1i") == 1);
        REQUIRE(tally.energy == 6);
    }
}

TEST_CASE("oracle examples and cap") {
    REQUIRE(energy_oracle(set_of({"1", "2", "3"})) == 15);
    REQUIRE(energy_oracle(set_of({"1"})) == 1);
    REQUIRE(energy_oracle(set_of({"1", "i"})) == 6);
    REQUIRE_THROWS_AS(energy_oracle(make_ap(17)), OracleCapExceeded);
    REQUIRE(energy_oracle(make_ap(3), 3) == 15);
}

TEST_CASE("tally agrees with oracle on random sets") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        std::size_t n = 1 + draw_below(rng, 10);
        ComplexSet A = make_random(n, 5, rng());
        REQUIRE(direction_tally(A).energy == energy_oracle(A));
    }
}

TEST_CASE("tally invariants on random sets") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 30; ++i) {
        std::size_t n = 1 + draw_below(rng, 12);
        ComplexSet A = make_random(n, 6, rng());
        DirectionTally tally = direction_tally(A);

        BigInt pair_total = 0;
        BigInt energy = 0;
        for (const auto& [t, count] : tally.nu) {
            pair_total += count;
            energy += BigInt(count) * count;
            REQUIRE(count >= 1);
            REQUIRE(count <= static_cast<std::int64_t>(n)); // a line holds <= |A| points
            REQUIRE(tally.nu.at(gq_div(GaussianRational(1), t)) == count);
        }
        REQUIRE(pair_total == BigInt(n) * n);
        REQUIRE(tally.nu.at(GaussianRational(1)) == static_cast<std::int64_t>(n));
        REQUIRE(tally.energy == energy);
    }
}

TEST_CASE("cauchy-schwarz bound") {
    SECTION("examples") {
        auto check = [](const ComplexSet& A, const char* bound) {
            DirectionTally tally = direction_tally(A);
            auto v = cauchy_schwarz_check(tally, A, productset(A).size());
            REQUIRE(v.lower_bound == Rational(std::string(bound)));
            REQUIRE(v.holds);
            return v;
        };
        REQUIRE(check(set_of({"1", "2", "3"}), "27/2").energy == 15);
        REQUIRE(check(set_of({"1"}), "1").energy == 1);
        REQUIRE(check(set_of({"1", "2", "4"}), "81/5").energy == 19);
    }
    SECTION("holds on every random set") {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 50; ++i) {
            ComplexSet A = make_random(1 + draw_below(rng, 14), 8, rng());
            DirectionTally tally = direction_tally(A);
            REQUIRE(cauchy_schwarz_check(tally, A, productset(A).size()).holds);
        }
    }
}

TEST_CASE("sumset is never smaller than the set") {
    std::mt19937_64 rng(97);
    for (int i = 0; i < 40; ++i) {
        ComplexSet A = make_random(1 + draw_below(rng, 16), 7, rng());
        REQUIRE(sumset(A).size() >= A.size());
    }
}

TEST_CASE("sumset and productset sizes are scaling invariant") {
    std::mt19937_64 rng(37);
    for (int i = 0; i < 25; ++i) {
        ComplexSet A = make_random(1 + draw_below(rng, 10), 6, rng());
        GaussianRational lambda = testing::random_nonzero_gaussian(rng, 7);
        std::vector<GaussianRational> scaled;
        for (const auto& a : A)
            scaled.push_back(lambda * a);
        ComplexSet lA = ComplexSet::from_elements(std::move(scaled));
        REQUIRE(sumset(lA).size() == sumset(A).size());
        REQUIRE(productset(lA).size() == productset(A).size());
    }
}
