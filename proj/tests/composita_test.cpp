#include "ramify2/composita.hpp"

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "ramify2/errors.hpp"
#include "random_inputs.hpp"

using namespace ramify2;

static slope_content sc(const char* text) { return slope_content::parse(text); }

TEST_CASE("crude compositum concatenates slopes and lcms the degrees") {
    slope_content a = sc("[2,3,7/2]_9");
    slope_content b = sc("[2,3,4]_15");
    CHECK(crude_compose(a, b).format() == "[2,2,3,3,7/2,4]_45");
    CHECK(crude_compose(b, a) == crude_compose(a, b));

    // residue degrees lcm independently of the tame degrees
    CHECK(crude_compose(sc("[2]_3^2"), sc("[3]_5^4")).format() == "[2,3]_15^4");
    CHECK(crude_compose(sc("[]_1"), sc("[]_1")) == sc("[]_1"));
}

TEST_CASE("contents over different primes do not compose") {
    CHECK_THROWS_AS(crude_compose(sc("[2]_1"), slope_content::parse("[2]_1", 3)),
                    domain_error);
    CHECK_THROWS_AS(check_compositum_bounds(
                        sc("[2]_1"), slope_content::parse("[2]_1", 3), sc("[2]_1")),
                    domain_error);
}

TEST_CASE("capping removes shared slopes smallest first") {
    slope_content a = sc("[2,3,7/2]_9");
    slope_content b = sc("[2,3,4]_15");
    CHECK(cap_wild_count(a, b, 6).format() == "[2,2,3,3,7/2,4]_45");  // fits
    CHECK(cap_wild_count(a, b, 5).format() == "[2,3,3,7/2,4]_45");
    CHECK(cap_wild_count(a, b, 4).format() == "[2,3,7/2,4]_45");
    CHECK_THROWS_AS(cap_wild_count(a, b, 3), infeasible_error);
    CHECK_THROWS_AS(cap_wild_count(a, b, -1), domain_error);
}

TEST_CASE("each shared value is removable at most min(m_a, m_b) times") {
    slope_content a = sc("[2,3,4]_1");
    CHECK(cap_wild_count(a, a, 5).format() == "[2,3,3,4,4]_1");
    CHECK(cap_wild_count(a, a, 4).format() == "[2,3,4,4]_1");
    CHECK(cap_wild_count(a, a, 3).format() == "[2,3,4]_1");
    CHECK_THROWS_AS(cap_wild_count(a, a, 2), infeasible_error);

    // nothing shared, nothing removable
    CHECK_THROWS_AS(cap_wild_count(sc("[2]_1"), sc("[3]_1"), 1),
                    infeasible_error);
}

TEST_CASE("compose_many folds left") {
    std::vector<slope_content> parts = {sc("[2]_1"), sc("[3]_1"), sc("[2]_3")};
    CHECK(compose_many(parts).format() == "[2,2,3]_3");
    CHECK(compose_many(parts, 2).format() == "[2,3]_3");
    CHECK(compose_many({sc("[2,3,4]_1")}) == sc("[2,3,4]_1"));
    CHECK_THROWS_AS(compose_many({}), domain_error);
    CHECK_THROWS_AS(compose_many({sc("[2,3,4]_1")}, 2), infeasible_error);
}

TEST_CASE("quartic 2-group compositum cap") {
    CHECK(quartic_compositum_cap().format() == "[2,2,3,3,7/2,4]_1^4");
    CHECK(quartic_compositum_cap().gms() == rational(113, 32));
}

TEST_CASE("compositum bound check") {
    slope_content a = sc("[2,3,7/2]_9");
    slope_content b = sc("[2,3,4]_15");
    CHECK(check_compositum_bounds(a, b, crude_compose(a, b)));
    CHECK(check_compositum_bounds(a, b, cap_wild_count(a, b, 4)));

    // wrong tame degree
    CHECK_FALSE(check_compositum_bounds(a, b, sc("[2,2,3,3,7/2,4]_9")));
    // a slope both factors carry cannot drop below its larger multiplicity
    CHECK_FALSE(check_compositum_bounds(sc("[3,3]_1"), sc("[3]_1"), sc("[3]_1")));
    // no more slopes >= s than the factors supply together
    CHECK_FALSE(
        check_compositum_bounds(sc("[3]_1"), sc("[3]_1"), sc("[3,3,3]_1")));
}

TEST_CASE("random pairs: crude mean slope dominates, bounds hold under capping") {
    std::mt19937 rng(911);
    for (int iter = 0; iter < 1000; ++iter) {
        slope_content a = testing::random_content(rng);
        slope_content b = testing::random_content(rng);
        slope_content crude = crude_compose(a, b);
        CAPTURE(a.format());
        CAPTURE(b.format());

        REQUIRE(crude.gms() >= std::max(a.gms(), b.gms()));
        REQUIRE(check_compositum_bounds(a, b, crude));
        for (int budget = crude.wild_count() - 1; budget >= 0; --budget) {
            try {
                slope_content capped = cap_wild_count(a, b, budget);
                REQUIRE(capped.wild_count() <= budget);
                REQUIRE(check_compositum_bounds(a, b, capped));
            } catch (const infeasible_error&) {
                break;  // smaller budgets only get harder
            }
        }
    }
}
