#include "algdct/dyadic.hpp"

#include <catch_amalgamated.hpp>

using namespace algdct;

TEST_CASE("construction canonicalizes", "[dyadic]") {
    CHECK(Dyadic(2, 2) == Dyadic(1, 1));    // 2/4 = 1/2
    CHECK(Dyadic(4, 3) == Dyadic(1, 1));    // 4/8 = 1/2
    CHECK(Dyadic(0, 5) == Dyadic(0, 0));
    CHECK(Dyadic(8, 3) == Dyadic(1, 0));    // 8/8 = 1
    CHECK(Dyadic(3, 3).num() == 3);
    CHECK(Dyadic(3, 3).log2_den() == 3);
    CHECK_THROWS_AS(Dyadic(-1, 2), std::domain_error);
    CHECK_THROWS_AS(Dyadic(5, 2), std::domain_error);  // 5/4 > 1
}

TEST_CASE("predicates and values", "[dyadic]") {
    CHECK(Dyadic(0, 0).is_zero());
    CHECK(Dyadic(1, 0).is_one());
    CHECK(Dyadic(1, 0).is_endpoint());
    CHECK_FALSE(Dyadic(1, 1).is_endpoint());
    CHECK(Dyadic(3, 3).den() == 8);
    CHECK(Dyadic(3, 3).to_rational() == make_rational(3, 8));
    CHECK(to_double(Dyadic(3, 3).to_rational()) == 0.375);
}

TEST_CASE("halving and reflection", "[dyadic]") {
    const Dyadic r(1, 1);
    CHECK(r.half() == Dyadic(1, 2));
    CHECK(r.one_minus_half() == Dyadic(3, 2));
    CHECK(Dyadic(3, 3).half() == Dyadic(3, 4));
    CHECK(Dyadic(3, 3).one_minus_half() == Dyadic(13, 4));
    CHECK(Dyadic(3, 3).complement() == Dyadic(5, 3));
    CHECK(Dyadic(0, 0).complement() == Dyadic(1, 0));
}

TEST_CASE("ordering is exact", "[dyadic]") {
    CHECK(Dyadic(1, 2) < Dyadic(1, 1));     // 1/4 < 1/2
    CHECK(Dyadic(5, 4) < Dyadic(3, 3));     // 5/16 < 6/16
    CHECK_FALSE(Dyadic(1, 1) < Dyadic(1, 1));
}

TEST_CASE("parse round trips", "[dyadic]") {
    CHECK(Dyadic::parse("3/8") == Dyadic(3, 3));
    CHECK(Dyadic::parse("3/2^3") == Dyadic(3, 3));
    CHECK(Dyadic::parse("1") == Dyadic(1, 0));
    CHECK(Dyadic::parse("0") == Dyadic(0, 0));
    CHECK(Dyadic::parse("0.375") == Dyadic(3, 3));
    CHECK(Dyadic::parse(Dyadic(7, 5).str()) == Dyadic(7, 5));
    CHECK(Dyadic(3, 3).str() == "3/8");
    CHECK(Dyadic(1, 0).str() == "1");
    CHECK_THROWS(Dyadic::parse("1/3"));      // not dyadic
    CHECK_THROWS(Dyadic::parse("5/4"));      // out of range
    CHECK_THROWS(Dyadic::parse("x"));
}

TEST_CASE("from_rational accepts only dyadics in range", "[dyadic]") {
    CHECK(Dyadic::from_rational(make_rational(5, 16)) == Dyadic(5, 4));
    CHECK_THROWS_AS(Dyadic::from_rational(make_rational(1, 3)), std::domain_error);
    CHECK_THROWS_AS(Dyadic::from_rational(make_rational(9, 8)), std::domain_error);
}
