#include "ramify2/rational.hpp"

#include <cstdint>

#include "doctest.h"
#include "ramify2/errors.hpp"

using namespace ramify2;

TEST_CASE("parse/format round trips") {
    CHECK(format_rational(parse_rational("7/2")) == "7/2");
    CHECK(format_rational(parse_rational("4")) == "4");
    CHECK(format_rational(parse_rational("6/4")) == "3/2");  // normalized
    CHECK(format_rational(parse_rational("-3/4")) == "-3/4");
    CHECK(format_rational(parse_rational("+5")) == "5");
    CHECK(format_rational(parse_rational("0")) == "0");
    CHECK(parse_rational("17/4") == rational(17, 4));
}

TEST_CASE("format omits unit denominators") {
    CHECK(format_rational(rational(3)) == "3");
    CHECK(format_rational(rational(31, 8)) == "31/8");
    CHECK(format_rational(rational(-1, 2)) == "-1/2");
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(parse_rational(""), syntax_error);
    CHECK_THROWS_AS(parse_rational("a"), syntax_error);
    CHECK_THROWS_AS(parse_rational("3.5"), syntax_error);  // no decimals
    CHECK_THROWS_AS(parse_rational("3/"), syntax_error);
    CHECK_THROWS_AS(parse_rational("3/0"), syntax_error);
    CHECK_THROWS_AS(parse_rational("1/2/3"), syntax_error);
    CHECK_THROWS_AS(parse_rational("2 /3"), syntax_error);  // no blanks
    CHECK_THROWS_AS(parse_rational("-"), syntax_error);
}

TEST_CASE("syntax errors carry the offending position") {
    try {
        parse_rational("12/");
        FAIL("expected syntax_error");
    } catch (const syntax_error& e) {
        CHECK(e.position() == 3);
    }
    try {
        parse_rational("3.5");
        FAIL("expected syntax_error");
    } catch (const syntax_error& e) {
        CHECK(e.position() == 1);
    }
    try {
        parse_rational("3/0");
        FAIL("expected syntax_error");
    } catch (const syntax_error& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("p-adic valuations") {
    CHECK(ord_p(8, 2) == 3);
    CHECK(ord_p(12, 2) == 2);
    CHECK(ord_p(45, 3) == 2);
    CHECK(ord_p(7, 7) == 1);
    CHECK(ord_p(5, 3) == 0);
    CHECK(ord_p(ipow(3, 40), 3) == 40);

    CHECK_THROWS_AS(ord_p(0, 2), domain_error);
    CHECK_THROWS_AS(ord_p(-4, 2), domain_error);
    CHECK_THROWS_AS(ord_p(4, 1), domain_error);
}

TEST_CASE("ord2 on machine integers") {
    CHECK(ord2(1) == 0);
    CHECK(ord2(144) == 4);
    CHECK(ord2(2592) == 5);
    CHECK(ord2(std::uint64_t(1) << 63) == 63);
    CHECK_THROWS_AS(ord2(0), domain_error);
}

TEST_CASE("lcm") {
    CHECK(lcm(4, 6) == 12);
    CHECK(lcm(1, 45) == 45);
    CHECK(lcm(9, 15) == 45);
    CHECK(lcm(7, 7) == 7);
}
