#include "spcert/dyadic.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spcert;
using spcert::testing::gq;
using spcert::testing::set_of;

namespace {

DirectionTally tally_of(std::initializer_list<const char*> elems) {
    return direction_tally(spcert::testing::set_of(elems));
}

} // namespace

TEST_CASE("decomposition examples") {
    SECTION("{1,2,3}") {
        auto classes = dyadic_decompose(tally_of({"1", "2", "3"}));
        REQUIRE(classes.size() == 2);
        REQUIRE(classes[0].k == 0);
        REQUIRE(classes[0].members.size() == 6);
        REQUIRE(classes[0].mass == 6);
        REQUIRE(classes[1].k == 1);
        REQUIRE(classes[1].members == std::vector{gq("1")});
        REQUIRE(classes[1].mass == 9);
    }
    SECTION("{1}") {
        auto classes = dyadic_decompose(tally_of({"1"}));
        REQUIRE(classes.size() == 1);
        REQUIRE(classes[0].k == 0);
        REQUIRE(classes[0].mass == 1);
    }
    SECTION("{1,2,4}") {
        auto classes = dyadic_decompose(tally_of({"1", "2", "4"}));
        REQUIRE(classes.size() == 2);
        REQUIRE(classes[0].k == 0);
        REQUIRE(classes[0].members == std::vector{gq("1/4"), gq("4")});
        REQUIRE(classes[0].mass == 2);
        REQUIRE(classes[1].k == 1);
        REQUIRE(classes[1].members.size() == 3);
        REQUIRE(classes[1].mass == 17);
    }
    SECTION("empty tally rejected") {
        REQUIRE_THROWS_AS(dyadic_decompose(DirectionTally{}), std::invalid_argument);
    }
}

TEST_CASE("selection examples") {
    SECTION("{1,2,3}: k=1 wins, provable bound 15/2 <= 9") {
        auto sel = select_popular_class(dyadic_decompose(tally_of({"1", "2", "3"})), 3);
        REQUIRE(sel.selected.k == 1);
        REQUIRE(sel.selected.mass == 9);
        REQUIRE(sel.energy == 15);
        REQUIRE(sel.provable_bound_holds);
        REQUIRE(sel.pigeonhole_holds);
    }
    SECTION("{1,2,4}: k=1 wins with mass 17 >= 19/2") {
        auto sel = select_popular_class(dyadic_decompose(tally_of({"1", "2", "4"})), 3);
        REQUIRE(sel.selected.k == 1);
        REQUIRE(sel.selected.mass == 17);
        REQUIRE(sel.provable_bound_holds);
    }
    SECTION("single class selects itself") {
        auto sel = select_popular_class(dyadic_decompose(tally_of({"1"})), 1);
        REQUIRE(sel.selected.k == 0);
        REQUIRE(sel.selected.mass == sel.energy);
        REQUIRE(sel.pigeonhole_holds);
        REQUIRE(sel.provable_bound_holds);
        REQUIRE_FALSE(sel.paper_bound_holds.has_value()); // |A| < 2
    }
}

TEST_CASE("tie on mass breaks toward smaller k") {
    // Synthetic tally: nu(1) = 2 gives class k=1 mass 4; four directions with
    // nu = 1 give class k=0 mass 4.
    DirectionTally tally;
    tally.nu[gq("1")] = 2;
    for (const char* t : {"2", "3", "4", "5"})
        tally.nu[gq(t)] = 1;
    tally.energy = 8;
    auto sel = select_popular_class(dyadic_decompose(tally), 2);
    REQUIRE(sel.selected.k == 0);
    REQUIRE(sel.selected.mass == 4);
}

TEST_CASE("partition, twofold comparability, pigeonhole on random sets") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 40; ++i) {
        ComplexSet A = make_random(1 + draw_below(rng, 14), 7, rng());
        DirectionTally tally = direction_tally(A);
        auto classes = dyadic_decompose(tally);

        std::size_t total_members = 0;
        BigInt total_mass = 0;
        for (const auto& cls : classes) {
            total_members += cls.members.size();
            total_mass += cls.mass;
            std::int64_t lo = INT64_MAX, hi = 0;
            for (const auto& t : cls.members) {
                std::int64_t count = tally.nu.at(t);
                REQUIRE(floor_log2(count) == cls.k);
                lo = std::min(lo, count);
                hi = std::max(hi, count);
            }
            REQUIRE(hi < 2 * lo); // nu values differ less than twofold
        }
        REQUIRE(total_members == tally.nu.size());
        REQUIRE(total_mass == tally.energy);

        auto sel = select_popular_class(classes, A.size());
        REQUIRE(sel.pigeonhole_holds);
        REQUIRE(sel.selected.mass * BigInt(classes.size()) >= tally.energy);
        REQUIRE(sel.provable_bound_holds);
    }
}
