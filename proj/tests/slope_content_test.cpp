#include "ramify2/slope_content.hpp"

#include <vector>

#include "doctest.h"
#include "ramify2/errors.hpp"

using namespace ramify2;

TEST_CASE("parse/format round trips") {
    for (const char* text : {"[3,4,5]_1", "[2,3,7/2,4,5]_1^2", "[]_3",
                             "[4/3,4/3,3]_3", "[2,3,7/2,4,17/4,5]_1"}) {
        CAPTURE(text);
        CHECK(slope_content::parse(text).format() == text);
    }
    CHECK(slope_content::parse("[ 3 , 4 ]_1").format() == "[3,4]_1");
    CHECK(slope_content::parse("[3]_1 ^ 4").format() == "[3]_1^4");
}

TEST_CASE("slopes are stored sorted regardless of input order") {
    CHECK(slope_content::parse("[3,2]_1").format() == "[2,3]_1");
    CHECK(slope_content::parse("[5,17/4,4,7/2,3,2]_1").format() ==
          "[2,3,7/2,4,17/4,5]_1");
    slope_content c(2, {rational(4), rational(2)}, 1);
    CHECK(c.wild().front() == rational(2));
}

TEST_CASE("default content is trivial") {
    slope_content c;
    CHECK(c.format() == "[]_1");
    CHECK(c.prime() == 2);
    CHECK(c.wild_count() == 0);
    CHECK(c.gms() == 0);
}

TEST_CASE("parse rejects malformed text") {
    CHECK_THROWS_AS(slope_content::parse("[3"), syntax_error);
    CHECK_THROWS_AS(slope_content::parse("(3)_1"), syntax_error);
    CHECK_THROWS_AS(slope_content::parse("[2,]_1"), syntax_error);
    CHECK_THROWS_AS(slope_content::parse("[2]_"), syntax_error);
    CHECK_THROWS_AS(slope_content::parse("[2]_1^"), syntax_error);
    CHECK_THROWS_AS(slope_content::parse("[2]_0"), syntax_error);
    CHECK_THROWS_AS(slope_content::parse("[3.5]_1"), syntax_error);
    CHECK_THROWS_AS(slope_content::parse("[3]_1 junk"), syntax_error);
    CHECK_THROWS_AS(slope_content::parse(""), syntax_error);

    try {
        slope_content::parse("(3)_1");
        FAIL("expected syntax_error");
    } catch (const syntax_error& e) {
        CHECK(e.position() == 0);
    }
}

TEST_CASE("constructor validates the data, not the notation") {
    // slopes must be wild
    CHECK_THROWS_AS(slope_content::parse("[1]_1"), domain_error);
    CHECK_THROWS_AS(slope_content(2, {rational(1, 2)}, 1), domain_error);
    // tame degree must be prime to p
    CHECK_THROWS_AS(slope_content::parse("[3]_2"), domain_error);
    CHECK_THROWS_AS(slope_content::parse("[3]_6", 2), domain_error);
    CHECK_THROWS_AS(slope_content::parse("[3]_6", 3), domain_error);
    CHECK_NOTHROW(slope_content::parse("[3]_6", 5));
    // p must be prime
    CHECK_THROWS_AS(slope_content::parse("[3]_1", 4), domain_error);
    CHECK_THROWS_AS(slope_content(1, {}, 1), domain_error);
}

TEST_CASE("mean slope of the worst octic contents") {
    CHECK(slope_content::parse("[3,4,5]_1").gms() == rational(31, 8));
    CHECK(slope_content::parse("[2,3,4,5]_1").gms() == rational(4));
    CHECK(slope_content::parse("[2,3,7/2,4,5]_1").gms() == rational(67, 16));
    CHECK(slope_content::parse("[2,3,7/2,4,17/4,5]_1").gms() ==
          rational(141, 32));
}

TEST_CASE("mean slope of tame contents is (t-1)/t") {
    CHECK(slope_content::parse("[]_1").gms() == 0);
    CHECK(slope_content::parse("[]_3").gms() == rational(2, 3));
    CHECK(slope_content::parse("[]_45").gms() == rational(44, 45));
}

TEST_CASE("mean slope ignores the residue degree") {
    CHECK(slope_content::parse("[2,3,4,5]_1^4").gms() ==
          slope_content::parse("[2,3,4,5]_1").gms());
    CHECK(slope_content::parse("[2,2,3,3,7/2,4]_1^4").gms() ==
          rational(113, 32));
}

TEST_CASE("mean slope weights ascending slopes by p^(i-1)(p-1)") {
    // [a,b]_t at p=2: (a + 2b + (t-1)/t) / 4
    CHECK(slope_content::parse("[3,4]_1").gms() == rational(11, 4));
    CHECK(slope_content::parse("[3,4]_3").gms() ==
          (rational(3) + 2 * rational(4) + rational(2, 3)) / 4);
    // p=3: weights 2, 6 over 9
    CHECK(slope_content::parse("[3/2,2]_1", 3).gms() == rational(5, 3));
}

TEST_CASE("slope multiplicities") {
    slope_content c = slope_content::parse("[2,3,3,4]_1");
    auto m3 = c.multiplicity(rational(3));
    CHECK(m3.equal == 2);
    CHECK(m3.at_least == 3);
    auto m72 = c.multiplicity(rational(7, 2));
    CHECK(m72.equal == 0);
    CHECK(m72.at_least == 1);
    auto m5 = c.multiplicity(rational(5));
    CHECK(m5.equal == 0);
    CHECK(m5.at_least == 0);
    CHECK_THROWS_AS(c.multiplicity(rational(1)), domain_error);
}

TEST_CASE("root-discriminant factors print as p^gms") {
    CHECK(slope_content::parse("[2,3,4,5]_1").grd().format() == "2^4");
    CHECK(slope_content::parse("[3,4,5]_1").grd().format() == "2^(31/8)");
}
