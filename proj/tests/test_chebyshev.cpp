#include "algdct/chebyshev.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace algdct;

namespace {
RationalPoly P(std::initializer_list<int> coeffs) {
    std::vector<Rational> c;
    for (int v : coeffs) c.emplace_back(v);
    return RationalPoly(std::move(c));
}
} // namespace

TEST_CASE("first kind", "[chebyshev]") {
    CHECK(cheb(ChebKind::T, 0) == P({1}));
    CHECK(cheb(ChebKind::T, 1) == P({0, 1}));
    CHECK(cheb(ChebKind::T, 2) == P({-1, 0, 2}));
    CHECK(cheb(ChebKind::T, 3) == P({0, -3, 0, 4}));
    CHECK(cheb(ChebKind::T, 4) == P({1, 0, -8, 0, 8}));
}

TEST_CASE("second kind", "[chebyshev]") {
    CHECK(cheb(ChebKind::U, 0) == P({1}));
    CHECK(cheb(ChebKind::U, 1) == P({0, 2}));
    CHECK(cheb(ChebKind::U, 2) == P({-1, 0, 4}));
    CHECK(cheb(ChebKind::U, 3) == P({0, -4, 0, 8}));
}

TEST_CASE("third kind", "[chebyshev]") {
    CHECK(cheb(ChebKind::V, 0) == P({1}));
    CHECK(cheb(ChebKind::V, 1) == P({-1, 2}));
    CHECK(cheb(ChebKind::V, 2) == P({-1, -2, 4}));
}

TEST_CASE("classical identities", "[chebyshev]") {
    for (std::size_t n = 1; n <= 8; ++n) {
        // U_{2n-1} = U_{n-1} * 2 T_n
        CHECK(cheb(ChebKind::U, 2 * n - 1) ==
              cheb(ChebKind::U, n - 1) * (Rational(2) * cheb(ChebKind::T, n)));
        // 2 T_n = V_n + V_{n-1}
        CHECK(Rational(2) * cheb(ChebKind::T, n) ==
              cheb(ChebKind::V, n) + cheb(ChebKind::V, n - 1));
        // 2 (x - 1) U_{n-1} = V_n - V_{n-1}
        CHECK(P({-2, 2}) * cheb(ChebKind::U, n - 1) ==
              cheb(ChebKind::V, n) - cheb(ChebKind::V, n - 1));
    }
}

TEST_CASE("closed forms at sampled angles", "[chebyshev]") {
    for (std::size_t n : {1, 2, 5, 16}) {
        for (double a : {0.3, 0.7, 1.1, 2.9}) {
            const double x = std::cos(a);
            const auto eval_d = [&](const RationalPoly& p) {
                double acc = 0;
                for (std::size_t i = p.coeffs().size(); i-- > 0;)
                    acc = acc * x + to_double(p.coeff(i));
                return acc;
            };
            CHECK_THAT(eval_d(cheb(ChebKind::T, n)),
                       Catch::Matchers::WithinAbs(std::cos(double(n) * a), 1e-9));
            CHECK_THAT(eval_d(cheb(ChebKind::U, n)),
                       Catch::Matchers::WithinAbs(std::sin(double(n + 1) * a) / std::sin(a),
                                                  1e-9));
            CHECK_THAT(eval_d(cheb(ChebKind::V, n)),
                       Catch::Matchers::WithinAbs(
                           std::cos((double(n) + 0.5) * a) / std::cos(a / 2), 1e-9));
        }
    }
}

TEST_CASE("doubled polynomials dilate to monic integer form", "[chebyshev]") {
    for (std::size_t n : {1, 2, 3, 8, 16}) {
        // 2 T_n has integer coefficients and leading coefficient 2^n.
        const RationalPoly t2 = two_t(n);
        CHECK(t2.degree() == int(n));
        CHECK(t2.leading() == Rational(Integer(1) << n));
        for (const Rational& c : t2.coeffs()) CHECK(is_integer(c));
        // Its dilation D_n(x) = 2 T_n(x/2) is monic over the integers and
        // agrees with 2 T_n under the substitution x = 2 q.
        const RationalPoly d(dilated_cheb_coeffs(n));
        CHECK(d.degree() == int(n));
        CHECK(d.leading() == 1);
        for (const Rational& c : d.coeffs()) CHECK(is_integer(c));
        for (const Rational& q :
             {make_rational(3, 7), make_rational(-2, 5), Rational(5)})
            CHECK(d.eval(Rational(2) * q) == t2.eval(q));
    }
}

TEST_CASE("factor_step splits one level", "[chebyshev]") {
    const FactorStep fs = factor_step(3, Dyadic(1, 1));
    CHECK(fs.child_skew_minus == Dyadic(1, 2));
    CHECK(fs.child_skew_plus == Dyadic(3, 2));
    CHECK(fs.c_prime == two_cos(Dyadic(1, 2)));
    CHECK(fs.minus_factor * fs.plus_factor == skew_poly(8, Dyadic(1, 1)));

    const FactorStep deep = factor_step(2, Dyadic(5, 3));
    CHECK(deep.child_skew_minus == Dyadic(5, 4));
    CHECK(deep.child_skew_plus == Dyadic(11, 4));
    CHECK(deep.minus_factor * deep.plus_factor == skew_poly(4, Dyadic(5, 3)));

    CHECK_THROWS_AS(factor_step(0, Dyadic(1, 1)), std::domain_error);
    CHECK_THROWS_AS(factor_step(2, Dyadic(0, 0)), std::domain_error);
    CHECK_THROWS_AS(factor_step(2, Dyadic(1, 0)), std::domain_error);
}

TEST_CASE("root angles", "[chebyshev]") {
    const auto a4 = root_angles_dct4_skew(4, Dyadic(1, 1));
    REQUIRE(a4.size() == 4);
    CHECK(a4[0] == Dyadic(1, 3));
    CHECK(a4[1] == Dyadic(3, 3));
    CHECK(a4[2] == Dyadic(5, 3));
    CHECK(a4[3] == Dyadic(7, 3));

    const auto s4 = root_angles_dct4_skew(4, Dyadic(1, 2));
    REQUIRE(s4.size() == 4);
    CHECK(s4[0] == Dyadic(1, 4));     // (0*2 + 1/4)/4
    CHECK(s4[1] == Dyadic(7, 4));     // (2 - 1/4)/4
    CHECK(s4[2] == Dyadic(9, 4));
    CHECK(s4[3] == Dyadic(15, 4));

    const auto d4 = root_angles_dct2(4);
    REQUIRE(d4.size() == 4);
    CHECK(d4[0] == Dyadic(0, 0));
    CHECK(d4[1] == Dyadic(1, 2));
    CHECK(d4[2] == Dyadic(1, 1));
    CHECK(d4[3] == Dyadic(3, 2));

    for (std::size_t i = 1; i < a4.size(); ++i) CHECK(a4[i - 1] < a4[i]);
    CHECK_THROWS(root_angles_dct4_skew(3, Dyadic(1, 1)));
    CHECK_THROWS(root_angles_dct2(0));
}

TEST_CASE("roots satisfy the defining polynomial exactly", "[chebyshev]") {
    for (const Dyadic& r : {Dyadic(1, 1), Dyadic(3, 3)}) {
        const FieldPoly p = skew_poly(8, r);
        for (const FieldElement& root : roots_dct4_skew(8, r)) {
            FieldElement acc = FieldElement::zero(root.level());
            for (std::size_t i = p.coeffs().size(); i-- > 0;)
                acc = acc * root + lift(p.coeff(i), root.level());
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("roots match cosines numerically", "[chebyshev]") {
    const auto roots = roots_dct4_skew(4, Dyadic(1, 1));
    const auto angles = root_angles_dct4_skew(4, Dyadic(1, 1));
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const double want = std::cos(std::numbers::pi * to_double(angles[i].to_rational()));
        CHECK_THAT(roots[i].real_value(), Catch::Matchers::WithinAbs(want, 1e-12));
    }
    CHECK_THAT(roots_dct2(4)[0].real_value(), Catch::Matchers::WithinAbs(1.0, 1e-15));
}
