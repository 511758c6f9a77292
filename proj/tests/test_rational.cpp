#include "algdct/rational.hpp"

#include <catch_amalgamated.hpp>

using namespace algdct;

TEST_CASE("make_rational reduces to lowest terms", "[rational]") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(-6, 9) == make_rational(-2, 3));
    CHECK(make_rational(0, 5) == Rational(0));
    CHECK(make_rational(7, -14) == make_rational(-1, 2));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("parse_rational accepts fractions, integers, and exact decimals", "[rational]") {
    CHECK(parse_rational("3/4") == make_rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("2/4") == make_rational(1, 2));
    CHECK(parse_rational("0.25") == make_rational(1, 4));
    CHECK(parse_rational("-1.5") == make_rational(-3, 2));
    CHECK(parse_rational("10") == Rational(10));
    CHECK_THROWS(parse_rational(""));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("string forms", "[rational]") {
    CHECK(rational_to_string(make_rational(3, 4)) == "3/4");
    CHECK(rational_to_string(Rational(5)) == "5/1");
    CHECK(rational_to_short_string(Rational(5)) == "5");
    CHECK(rational_to_short_string(make_rational(-3, 7)) == "-3/7");
}

TEST_CASE("numeric helpers", "[rational]") {
    CHECK(to_double(make_rational(1, 2)) == 0.5);
    CHECK(is_integer(Rational(9)));
    CHECK_FALSE(is_integer(make_rational(9, 2)));
    CHECK(reciprocal(make_rational(3, 5)) == make_rational(5, 3));
    CHECK_THROWS_AS(reciprocal(Rational(0)), std::domain_error);
}

TEST_CASE("arbitrary precision survives large products", "[rational]") {
    Rational big = 1;
    for (int i = 1; i <= 40; ++i) big *= make_rational(1 << 10, i);
    Rational back = big;
    for (int i = 1; i <= 40; ++i) back /= make_rational(1 << 10, i);
    CHECK(back == 1);
}
