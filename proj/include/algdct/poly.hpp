#pragma once

#include "algdct/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace algdct {

// Customization point for polynomial coefficient rings.  The primary template
// fits any plain value ring (Rational).  FieldElement specializes it so that
// operands at different tower levels are lifted to a common level first.
template <class C>
struct coeff_ops {
    static C zero() { return C(0); }
    static bool is_zero(const C& c) { return c == 0; }
    static C add(const C& a, const C& b) { return a + b; }
    static C sub(const C& a, const C& b) { return a - b; }
    static C mul(const C& a, const C& b) { return a * b; }
    static C div(const C& a, const C& b) {
        if (is_zero(b)) throw std::domain_error("poly: division by zero coefficient");
        return a / b;
    }
    static C neg(const C& a) { return -a; }
    static bool eq(const C& a, const C& b) { return a == b; }
};

// Dense univariate polynomial over C, coefficient of x^i at position i.
// Canonical form: no trailing zero coefficients (the zero polynomial has an
// empty coefficient vector and degree -1).
template <class C>
class Poly {
public:
    using ops = coeff_ops<C>;

    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(C value) { return Poly(std::vector<C>{std::move(value)}); }
    /// The monomial value * x^degree.
    static Poly monomial(C value, std::size_t degree) {
        std::vector<C> c(degree + 1, ops::zero());
        c[degree] = std::move(value);
        return Poly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree, with deg(0) = -1.
    int degree() const { return int(c_.size()) - 1; }
    const std::vector<C>& coeffs() const { return c_; }

    /// Coefficient of x^i (zero beyond the stored degree).
    const C& coeff(std::size_t i) const {
        static const C z = ops::zero();
        return i < c_.size() ? c_[i] : z;
    }
    C leading() const {
        if (is_zero()) throw std::domain_error("poly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), ops::zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ops::add(a.coeff(i), b.coeff(i));
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), ops::zero());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ops::sub(a.coeff(i), b.coeff(i));
        return Poly(std::move(r));
    }
    Poly operator-() const {
        std::vector<C> r(c_.size(), ops::zero());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ops::neg(c_[i]);
        return Poly(std::move(r));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, ops::zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (ops::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (ops::is_zero(b.c_[j])) continue;
                r[i + j] = ops::add(r[i + j], ops::mul(a.c_[i], b.c_[j]));
            }
        }
        return Poly(std::move(r));
    }
    friend Poly operator*(const C& s, const Poly& p) {
        std::vector<C> r(p.c_.size(), ops::zero());
        for (std::size_t i = 0; i < p.c_.size(); ++i) r[i] = ops::mul(s, p.c_[i]);
        return Poly(std::move(r));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!ops::eq(a.c_[i], b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division: returns (quotient, remainder) with
    /// a = q*b + r, deg r < deg b.  Requires b != 0 with invertible leading
    /// coefficient (always true over a field).
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw std::domain_error("poly: division by zero polynomial");
        Poly r = a;
        if (a.degree() < b.degree()) return {zero(), r};
        std::vector<C> q(std::size_t(a.degree() - b.degree()) + 1, ops::zero());
        const C lead = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const std::size_t shift = std::size_t(r.degree() - b.degree());
            const C factor = ops::div(r.leading(), lead);
            q[shift] = factor;
            // r -= factor * x^shift * b, dropping the (now zero) lead exactly.
            std::vector<C> rc = r.c_;
            for (std::size_t i = 0; i < b.c_.size(); ++i)
                rc[i + shift] = ops::sub(rc[i + shift], ops::mul(factor, b.c_[i]));
            r = Poly(std::move(rc));
        }
        return {Poly(std::move(q)), r};
    }

    /// Horner evaluation at a point of any ring E that supports e*x+c via
    /// the supplied operations.
    template <class E, class MulAdd>
    E eval_with(const E& x, const E& zero, MulAdd&& mul_add) const {
        E acc = zero;
        for (std::size_t i = c_.size(); i-- > 0;) acc = mul_add(acc, x, c_[i]);
        return acc;
    }

    C eval(const C& x) const {
        C acc = ops::zero();
        for (std::size_t i = c_.size(); i-- > 0;) acc = ops::add(ops::mul(acc, x), c_[i]);
        return acc;
    }

    /// Substitution: this(g(x)), computed by Horner over Poly.
    Poly compose(const Poly& g) const {
        Poly acc = zero();
        for (std::size_t i = c_.size(); i-- > 0;)
            acc = acc * g + constant(c_[i]);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && ops::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
};

using RationalPoly = Poly<Rational>;

/// Extended Euclid over a coefficient field: returns (g, s, t) with
/// s*a + t*b = g = gcd(a, b), g monic (or zero).
template <class C>
std::tuple<Poly<C>, Poly<C>, Poly<C>> extended_gcd(const Poly<C>& a, const Poly<C>& b) {
    using P = Poly<C>;
    P r0 = a, r1 = b;
    P s0 = P::constant(C(1)), s1 = P::zero();
    P t0 = P::zero(), t1 = P::constant(C(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        r0 = r1; r1 = r2;
        P s2 = s0 - q * s1;
        P t2 = t0 - q * t1;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero()) {
        // Normalize to a monic gcd.
        const C inv = coeff_ops<C>::div(C(1), r0.leading());
        r0 = inv * r0;
        s0 = inv * s0;
        t0 = inv * t0;
    }
    return {r0, s0, t0};
}

/// Render with an arbitrary coefficient printer, highest degree first
/// (e.g. "x^4 - 4*x^2 + 2").
template <class C, class Fmt>
std::string poly_to_string(const Poly<C>& p, const std::string& var, Fmt&& fmt_coeff) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int d = p.degree(); d >= 0; --d) {
        const C& c = p.coeff(std::size_t(d));
        if (coeff_ops<C>::is_zero(c)) continue;
        std::string cs = fmt_coeff(c);
        const bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const bool unit = (cs == "1");
        if (d == 0) {
            out += cs;
        } else {
            if (!unit) out += cs + "*";
            out += var;
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

inline std::string poly_to_string(const RationalPoly& p, const std::string& var = "x") {
    return poly_to_string(p, var, [](const Rational& q) { return rational_to_short_string(q); });
}

} // namespace algdct
