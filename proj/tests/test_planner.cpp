#include "algdct/plan.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace algdct;

TEST_CASE("scalar canonicalization", "[planner]") {
    CHECK(PlanScalar::two_cos_of(Dyadic(0, 0)).is_rational());
    CHECK(PlanScalar::two_cos_of(Dyadic(0, 0)).rational_value() == 2);
    CHECK(PlanScalar::two_cos_of(Dyadic(1, 0)).rational_value() == -2);
    CHECK(PlanScalar::two_cos_of(Dyadic(1, 1)).is_zero());
    CHECK(PlanScalar::cos_of(Dyadic(0, 0)).is_one());
    CHECK(PlanScalar(Dyadic(1, 0), make_rational(-1, 2)).is_one());
    CHECK(PlanScalar(Dyadic(1, 1), Rational(5)).is_zero());
    CHECK(PlanScalar(Dyadic(1, 1), Rational(5)).scale() == 0);
    CHECK(PlanScalar::from_rational(Rational(-1)).is_minus_one());
    CHECK(PlanScalar::from_rational(make_rational(7, 3)).rational_value() == make_rational(7, 3));
    CHECK_FALSE(PlanScalar::two_cos_of(Dyadic(1, 2)).is_rational());
    CHECK_THROWS_AS(PlanScalar::two_cos_of(Dyadic(1, 2)).rational_value(), std::domain_error);
}

TEST_CASE("scalar cost model", "[planner]") {
    CHECK_FALSE(PlanScalar::from_rational(Rational(1)).is_costly());
    CHECK_FALSE(PlanScalar::from_rational(Rational(-1)).is_costly());
    CHECK_FALSE(PlanScalar::from_rational(Rational(0)).is_costly());
    CHECK(PlanScalar::from_rational(Rational(5)).is_costly());
    CHECK(PlanScalar::two_cos_of(Dyadic(1, 2)).is_costly());   // √2
    CHECK_FALSE(PlanScalar::two_cos_of(Dyadic(1, 1)).is_costly());
    CHECK_FALSE(PlanScalar::cos_of(Dyadic(0, 0)).is_costly());

    // The canonical form decides rationality exactly: for every dyadic angle
    // the symbolic answer agrees with the exact field element.
    for (int j = 0; j <= 6; ++j)
        for (std::int64_t i = 0; i <= (std::int64_t(1) << j); ++i) {
            const Dyadic t(i, j);
            CHECK(PlanScalar::two_cos_of(t).is_rational() == two_cos(t).is_rational());
        }
}

TEST_CASE("scalar exact and numeric forms agree", "[planner]") {
    for (const auto& s : {PlanScalar::two_cos_of(Dyadic(1, 2)),
                          PlanScalar::cos_of(Dyadic(3, 4)),
                          PlanScalar(Dyadic(5, 5), make_rational(-3, 7)),
                          PlanScalar::from_rational(make_rational(9, 4))}) {
        CHECK_THAT(s.to_double(),
                   Catch::Matchers::WithinAbs(s.to_field().real_value(), 1e-12));
    }
    CHECK(PlanScalar::two_cos_of(Dyadic(1, 2)).level() == 1);
    CHECK(PlanScalar::two_cos_of(Dyadic(1, 4)).level() == 3);
    CHECK(PlanScalar::two_cos_of(Dyadic(1, 1)).level() == 0);
    CHECK(PlanScalar::two_cos_of(Dyadic(1, 2)).exact_string() == "√2");
    CHECK(PlanScalar::cos_of(Dyadic(1, 2)).exact_string() == "1/2*√2");
    CHECK(PlanScalar(Dyadic(1, 2), Rational(-1)).exact_string() == "-√2");
    CHECK(PlanScalar(Dyadic(3, 2), Rational(-1)).exact_string() == "√2");
    CHECK(PlanScalar::from_rational(Rational(3)).exact_string() == "3");
}

TEST_CASE("skewed plan structure", "[planner]") {
    const TransformPlan p = plan_dct4_poly(8, Dyadic(1, 1));
    CHECK(p.transform == TransformKind::dct4_poly);
    CHECK(p.size == 8);
    REQUIRE(p.skew.has_value());
    CHECK(*p.skew == Dyadic(1, 1));
    REQUIRE(p.stages.size() == 4);
    CHECK(p.stages[0].kind == StageKind::add_scale_block);
    CHECK(p.stages[0].half == 4);
    CHECK(p.stages[0].scalar == PlanScalar::two_cos_of(Dyadic(1, 2)));
    CHECK(p.stages[1].kind == StageKind::butterfly_pair);
    CHECK(p.stages[2].kind == StageKind::block_split);
    REQUIRE(p.stages[2].children.size() == 2);
    CHECK(*p.stages[2].children[0].skew == Dyadic(1, 2));
    CHECK(*p.stages[2].children[1].skew == Dyadic(3, 2));
    CHECK(p.stages[3].kind == StageKind::permutation);
    CHECK(p.stages[3].perm == std::vector<std::size_t>{0, 4, 5, 1, 2, 6, 7, 3});
}

TEST_CASE("merge permutations sort root angles", "[planner]") {
    CHECK(plan_dct4_poly(4, Dyadic(1, 1)).stages.back().perm ==
          std::vector<std::size_t>{0, 2, 3, 1});
    CHECK(plan_dct4_poly(16, Dyadic(1, 1)).stages.back().perm ==
          std::vector<std::size_t>{0, 8, 9, 1, 2, 10, 11, 3, 4, 12, 13, 5, 6, 14, 15, 7});
    // General skews reduce to the same merge once child angles interleave the
    // same way; spot-check against a direct sort.
    const Dyadic r(3, 3);
    const auto perm = plan_dct4_poly(8, r).stages.back().perm;
    const auto minus = root_angles_dct4_skew(4, r.half());
    const auto plus = root_angles_dct4_skew(4, r.one_minus_half());
    std::vector<Dyadic> merged;
    for (std::size_t i : perm) merged.push_back(i < 4 ? minus[i] : plus[i - 4]);
    const auto direct = root_angles_dct4_skew(8, r);
    CHECK(merged == direct);
}

TEST_CASE("terminal plans", "[planner]") {
    const TransformPlan p = plan_dct4_poly(1, Dyadic(3, 3));
    CHECK(p.size == 1);
    REQUIRE(p.stages.size() == 1);
    CHECK(p.stages[0].kind == StageKind::identity);
    REQUIRE(p.skew.has_value());
    CHECK(*p.skew == Dyadic(3, 3));

    const TransformPlan q = plan_dct2_poly(1);
    CHECK(q.stages.size() == 1);
    CHECK_FALSE(q.skew.has_value());
}

TEST_CASE("reflection split structure", "[planner]") {
    const TransformPlan p = plan_dct2_poly(8);
    CHECK(p.transform == TransformKind::dct2_poly);
    CHECK_FALSE(p.skew.has_value());
    REQUIRE(p.stages.size() == 3);
    CHECK(p.stages[0].kind == StageKind::dct2_merge);
    CHECK(p.stages[0].half == 4);
    CHECK(p.stages[1].kind == StageKind::block_split);
    REQUIRE(p.stages[1].children.size() == 2);
    CHECK(p.stages[1].children[0].transform == TransformKind::dct2_poly);
    CHECK(p.stages[1].children[1].transform == TransformKind::dct4_poly);
    CHECK(*p.stages[1].children[1].skew == Dyadic(1, 1));
    CHECK(p.stages[2].perm ==
          std::vector<std::size_t>{0, 4, 1, 5, 2, 6, 3, 7});
}

TEST_CASE("cosine-normalized variants append a diagonal", "[planner]") {
    const std::size_t n = 8;
    const TransformPlan p4 = plan_dct4(n);
    CHECK(p4.transform == TransformKind::dct4);
    CHECK_FALSE(p4.skew.has_value());
    REQUIRE(p4.stages.back().kind == StageKind::diagonal);
    REQUIRE(p4.stages.back().entries.size() == n);
    for (std::size_t i = 0; i < n; ++i) {
        const double want = std::cos(std::numbers::pi * double(2 * i + 1) / double(4 * n));
        CHECK_THAT(p4.stages.back().entries[i].to_double(),
                   Catch::Matchers::WithinAbs(want, 1e-15));
    }

    const TransformPlan p2 = plan_dct2(n);
    CHECK(p2.transform == TransformKind::dct2);
    REQUIRE(p2.stages.back().kind == StageKind::diagonal);
    CHECK(p2.stages.back().entries[0].is_one());
    for (std::size_t i = 0; i < n; ++i) {
        const double want = std::cos(std::numbers::pi * double(i) / double(2 * n));
        CHECK_THAT(p2.stages.back().entries[i].to_double(),
                   Catch::Matchers::WithinAbs(want, 1e-15));
    }
}

TEST_CASE("invalid plan requests are rejected", "[planner]") {
    CHECK_THROWS_AS(plan_dct4_poly(3, Dyadic(1, 1)), std::domain_error);
    CHECK_THROWS_AS(plan_dct4_poly(0, Dyadic(1, 1)), std::domain_error);
    CHECK_THROWS_AS(plan_dct4_poly(8, Dyadic(0, 0)), std::domain_error);
    CHECK_THROWS_AS(plan_dct4_poly(8, Dyadic(1, 0)), std::domain_error);
    CHECK_THROWS_AS(plan_dct2_poly(6), std::domain_error);
    CHECK_THROWS_AS(plan_dct2(0), std::domain_error);
}
