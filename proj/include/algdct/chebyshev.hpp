#pragma once

#include "algdct/dyadic.hpp"
#include "algdct/poly.hpp"
#include "algdct/tower.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace algdct {

enum class ChebKind { T, U, V };

/// Chebyshev polynomials by the shared recurrence P_n = 2x P_{n-1} - P_{n-2}:
///   T (first kind):  T_0 = 1, T_1 = x        T_n(cos a) = cos(na)
///   U (second kind): U_0 = 1, U_1 = 2x       U_n(cos a) = sin((n+1)a)/sin(a)
///   V (third kind):  V_0 = 1, V_1 = 2x - 1   V_n(cos a) = cos((n+1/2)a)/cos(a/2)
inline RationalPoly cheb(ChebKind kind, std::size_t n) {
    RationalPoly p0 = RationalPoly::constant(Rational(1));
    RationalPoly p1;
    switch (kind) {
        case ChebKind::T: p1 = RationalPoly({Rational(0), Rational(1)}); break;
        case ChebKind::U: p1 = RationalPoly({Rational(0), Rational(2)}); break;
        case ChebKind::V: p1 = RationalPoly({Rational(-1), Rational(2)}); break;
    }
    if (n == 0) return p0;
    if (n == 1) return p1;
    const RationalPoly two_x({Rational(0), Rational(2)});
    for (std::size_t i = 2; i <= n; ++i) {
        RationalPoly next = two_x * p1 - p0;
        p0 = std::move(p1);
        p1 = std::move(next);
    }
    return p1;
}

/// 2*T_n(x), the polynomial family whose shifted copies 2T_n - 2cos(r*pi)
/// drive the whole factorization.
inline RationalPoly two_t(std::size_t n) { return Rational(2) * cheb(ChebKind::T, n); }

/// One exact factorization step over the tower:
///   2T_{2^k}(x) - 2cos(r*pi)
///     = (2T_{2^(k-1)}(x) - 2cos(r/2*pi)) * (2T_{2^(k-1)}(x) + 2cos(r/2*pi))
/// since the second factor equals 2T_{2^(k-1)} - 2cos((1-r/2)*pi).  The
/// returned pair is (minus-factor, plus-factor); constant terms are exact
/// field elements one level above the parent constant.
struct FactorStep {
    FieldPoly minus_factor;  // 2T_m - c',  c' = 2cos(r/2 * pi)
    FieldPoly plus_factor;   // 2T_m + c'
    Dyadic child_skew_minus; // r/2
    Dyadic child_skew_plus;  // 1 - r/2
    FieldElement c_prime;    // 2cos(r/2 * pi)
};

inline FactorStep factor_step(int k, const Dyadic& r) {
    if (k < 1) throw std::domain_error("factor_step: k must be >= 1");
    if (r.is_endpoint()) throw std::domain_error("factor_step: skew must lie strictly in (0, 1)");
    const std::size_t m = std::size_t(1) << (k - 1);
    const FieldElement c_prime = two_cos(r.half());
    const FieldPoly base = to_field_poly(two_t(m));
    FactorStep out{base - FieldPoly::constant(c_prime),
                   base + FieldPoly::constant(c_prime),
                   r.half(),
                   r.one_minus_half(),
                   c_prime};
    return out;
}

/// The polynomial 2T_n(x) - 2cos(r*pi) with its exact constant.
inline FieldPoly skew_poly(std::size_t n, const Dyadic& r) {
    return to_field_poly(two_t(n)) - FieldPoly::constant(two_cos(r));
}

// ---- roots -----------------------------------------------------------------
//
// Root angles are dyadic multiples of pi; roots themselves are cos of those
// angles, i.e. halved two_cos values.  All lists are sorted by increasing
// angle (equivalently decreasing root value), which fixes row order in every
// transform of the artifact.

/// Angles t (root = cos(t*pi)) of 2T_n(x) - 2cos(r*pi): solutions of
/// cos(n*a) = cos(r*pi), i.e. t = (2j ± r)/n in (0, 1).  Exactly n of them.
inline std::vector<Dyadic> root_angles_dct4_skew(std::size_t n, const Dyadic& r) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::domain_error("roots: transform size must be a power of two");
    if (r.is_endpoint()) throw std::domain_error("roots: skew must lie strictly in (0, 1)");
    std::vector<Dyadic> angles;
    angles.reserve(n);
    // t = (2j + r)/n and t = (2j + 2 - r)/n, both with denominator n * den(r).
    const Integer den = Integer(n) * Integer(r.den());
    for (std::size_t j = 0; 2 * j < n + 2; ++j) {
        const Integer num_plus = Integer(2 * j) * r.den() + r.num();
        const Integer num_minus = Integer(2 * j + 2) * r.den() - r.num();
        if (num_plus < den) angles.emplace_back(Dyadic::from_rational(make_rational(num_plus, den)));
        if (num_minus < den) angles.emplace_back(Dyadic::from_rational(make_rational(num_minus, den)));
    }
    std::sort(angles.begin(), angles.end());
    if (angles.size() != n) throw std::logic_error("roots: wrong root count");
    return angles;
}

/// Angles of (x - 1) * U_{n-1}(x): t = 0 followed by k/n, k = 1..n-1.
inline std::vector<Dyadic> root_angles_dct2(std::size_t n) {
    if (n == 0 || (n & (n - 1)) != 0)
        throw std::domain_error("roots: transform size must be a power of two");
    std::vector<Dyadic> angles;
    angles.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        angles.emplace_back(Dyadic::from_rational(make_rational(std::int64_t(k), std::int64_t(n))));
    return angles;
}

/// cos(t*pi) as an exact field element (half of two_cos).
inline FieldElement cos_of(const Dyadic& t) { return make_rational(1, 2) * two_cos(t); }

inline std::vector<FieldElement> roots_dct4_skew(std::size_t n, const Dyadic& r) {
    std::vector<FieldElement> roots;
    roots.reserve(n);
    for (const auto& t : root_angles_dct4_skew(n, r)) roots.push_back(cos_of(t));
    return roots;
}

inline std::vector<FieldElement> roots_dct2(std::size_t n) {
    std::vector<FieldElement> roots;
    roots.reserve(n);
    for (const auto& t : root_angles_dct2(n)) roots.push_back(cos_of(t));
    return roots;
}

} // namespace algdct
