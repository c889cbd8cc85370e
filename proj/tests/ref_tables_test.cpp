#include "ramify2/ref_tables.hpp"

#include <sstream>

#include "doctest.h"
#include "ramify2/errors.hpp"
#include "ramify2/towers.hpp"

using namespace ramify2;

TEST_CASE("discriminant-bound table is sorted and strict") {
    const auto& table = rd_bound_table();
    REQUIRE(table.size() == 8);
    for (std::size_t i = 1; i < table.size(); ++i) {
        CHECK(table[i - 1].gms2_bound < table[i].gms2_bound);
        CHECK(table[i - 1].max_order < table[i].max_order);
    }
    CHECK(table.front().max_order == 88);
    CHECK(table.back().max_order == 8862);
    CHECK(table.back().rd_display == "22.021");
}

TEST_CASE("order bound lookups used by the eliminations") {
    CHECK(order_bound_for_gms(rational(97, 24)) == 110);
    CHECK(order_bound_for_gms(rational(101, 24)) == 220);
    CHECK(order_bound_for_gms(rational(53, 12)) == 2400);
    CHECK(order_bound_for_gms(rational(71, 16)) == 4800);
    CHECK(order_bound_for_gms(rational(203, 48)) == 240);
    CHECK(order_bound_for_gms(rational(413, 96)) == 400);
    CHECK(order_bound_for_gms(rational(495, 112)) == 2400);
    CHECK(order_bound_for_gms(rational(107, 24)) == 8862);
}

TEST_CASE("order bound is strict in the threshold") {
    CHECK(order_bound_for_gms(rational(0)) == 88);
    CHECK(order_bound_for_gms(rational(4001, 1000)) == 88);
    // equality falls through to the next row
    CHECK(order_bound_for_gms(rational(4002, 1000)) == 110);
    CHECK(order_bound_for_gms(rational(4459, 1000)) == 8862);
    CHECK_THROWS_AS(order_bound_for_gms(rational(4460, 1000)), no_bound_error);
    CHECK_THROWS_AS(order_bound_for_gms(rational(9, 2)), no_bound_error);
    CHECK_THROWS_AS(order_bound_for_gms(rational(5)), no_bound_error);
}

TEST_CASE("octic classes") {
    CHECK(octic_class_tag(octic_class::three_slopes) == "octic-3-slopes");
    CHECK(octic_class_tag(octic_class::no_five) == "octic-no-5");
    CHECK(octic_class_tag(octic_class::no_seventeen_quarter_with_five) ==
          "octic-no-17/4-with-5");

    CHECK(octic_max_content(octic_class::three_slopes).wild_count() == 3);
    CHECK(octic_max_content(octic_class::four_slopes).wild_count() == 4);
    CHECK(octic_max_content(octic_class::five_slopes).wild_count() == 5);
    CHECK(octic_max_content(octic_class::six_slopes).wild_count() == 6);

    CHECK(octic_max_content(octic_class::no_five).gms() == rational(17, 4));
    CHECK(octic_max_content(octic_class::no_seventeen_quarter_with_five) ==
          octic_max_content(octic_class::five_slopes));

    // every octic slope respects the closure ceiling 2/(2-1) + ord_2(8)
    rational ceiling = closure_slope_bound(2, 8);
    for (octic_class cls :
         {octic_class::three_slopes, octic_class::four_slopes,
          octic_class::five_slopes, octic_class::six_slopes,
          octic_class::no_five, octic_class::no_seventeen_quarter_with_five}) {
        for (const rational& s : octic_max_content(cls).wild()) {
            CHECK(s <= ceiling);
        }
    }
}

TEST_CASE("local caps by completion degree") {
    CHECK(local_cap(1, "tame").format() == "[]_1");
    CHECK(local_cap(3, "tame").format() == "[]_3");
    CHECK(local_cap(2, "quadratic").format() == "[3]_1");
    CHECK(local_cap(4, "quartic-2group").format() == "[2,3,4]_1");
    CHECK(local_cap(4, "quartic-2group-2slopes").format() == "[3,4]_1");
    CHECK(local_cap(4, "quartic-non-2group").format() == "[8/3,8/3]_3");

    CHECK_THROWS_AS(local_cap(6, "tame"), twin_algebra_error);
    CHECK_THROWS_AS(local_cap(6, "anything"), twin_algebra_error);
    CHECK_THROWS_AS(local_cap(9, "tame"), domain_error);
    CHECK_THROWS_AS(local_cap(8, "nope"), domain_error);
}

TEST_CASE("override files replace existing rows") {
    cap_table table;
    std::istringstream in(
        "# comment\n"
        "\n"
        "cap 2 quadratic [2]_1\n");
    table.load_overrides(in);
    CHECK(table.local_cap(2, "quadratic").format() == "[2]_1");
    // built-in table is untouched
    CHECK(local_cap(2, "quadratic").format() == "[3]_1");
}

TEST_CASE("override errors") {
    cap_table table;
    std::istringstream unknown("cap 9 tame []_1\n");
    CHECK_THROWS_AS(table.load_overrides(unknown), domain_error);

    std::istringstream keyword("caps 2 quadratic [2]_1\n");
    CHECK_THROWS_AS(table.load_overrides(keyword), syntax_error);

    std::istringstream missing("cap 2 quadratic\n");
    CHECK_THROWS_AS(table.load_overrides(missing), syntax_error);

    std::istringstream trailing("cap 2 quadratic [2]_1 extra\n");
    CHECK_THROWS_AS(table.load_overrides(trailing), syntax_error);

    std::istringstream content("cap 2 quadratic [1]_1\n");
    CHECK_THROWS_AS(table.load_overrides(content), domain_error);
}
