#pragma once

#include "algdct/config.hpp"
#include "algdct/dyadic.hpp"
#include "algdct/poly.hpp"
#include "algdct/rational.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstddef>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algdct {

// The tower Q = F_0 < F_1 < F_2 < ... with F_k = Q(theta_k),
// theta_k = 2cos(pi/2^(k+1)):  theta_0 = 0, theta_1 = sqrt(2),
// theta_2 = sqrt(2+sqrt(2)), ...  [F_k : Q] = 2^k.
//
// Throughout, D_n denotes the dilated Chebyshev polynomial D_n(x) = 2T_n(x/2)
// (monic with integer coefficients for n >= 1; D_0 = 2).  Key facts used all
// over this header, direct consequences of 2cos(a)2cos(b) = 2cos(a+b)+2cos(a-b):
//
//   minimal polynomial of theta_k over Q:  D_{2^k}(x)
//   D_a * D_b = D_{a+b} + D_{|a-b|}
//   D_a(D_b(x)) = D_{ab}(x)
//   evaluated at theta_k (phi = pi/2^(k+1), N = 2^k):
//       D_t(theta_k) = 2cos(t*phi), so indices fold with period 4N:
//       D_{4N-t} = D_t,  D_{2N-t} = -D_t,  D_N = 0.

/// Integer coefficients of D_n(x) = 2T_n(x/2), by the closed form
/// D_n = sum_j (-1)^j n/(n-j) C(n-j, j) x^(n-2j), built incrementally with
/// exact integer ratio updates (O(n) big-integer operations).
inline std::vector<Rational> dilated_cheb_coeffs(std::size_t n) {
    if (n == 0) return {Rational(2)};
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Integer a = 1;
    for (std::size_t j = 0; 2 * (j + 1) <= n; ++j) {
        a = a * Integer(n - 2 * j) * Integer(n - 2 * j - 1) /
            (Integer(j + 1) * Integer(n - j - 1));
        c[n - 2 * (j + 1)] = Rational((j + 1) % 2 ? -a : a);
    }
    return c;
}

namespace detail {

/// Accumulate p * D_t(theta_k) into a basis-coefficient vector acc of length
/// N = 2^k over the basis (1, D_1, ..., D_{N-1}); t may be any non-negative
/// index and is folded by the rules above.  (Note basis slot 0 holds the
/// coefficient of 1, while D_0 = 2.)
inline void add_dilated_term(std::vector<Rational>& acc, unsigned long long t, const Rational& p) {
    const unsigned long long N = acc.size();
    t %= 4 * N;
    if (t > 2 * N) t = 4 * N - t;
    if (t == N) return;                       // D_N(theta) = 0
    if (t == 0) { acc[0] += 2 * p; return; }  // D_0 = 2
    if (t == 2 * N) { acc[0] -= 2 * p; return; }
    if (t < N) acc[std::size_t(t)] += p;
    else acc[std::size_t(2 * N - t)] -= p;
}

} // namespace detail

// One level of the tower.  Immutable singletons, obtained via get(k).
class TowerLevel {
public:
    /// Level accessor (thread-safe).  Throws when k is negative or above the
    /// configured cap.
    static const TowerLevel& get(int k) {
        if (k < 0 || k > limits::max_tower_level)
            throw std::domain_error("tower: level " + std::to_string(k) +
                                    " outside [0, " + std::to_string(limits::max_tower_level) + "]");
        static std::mutex mu;
        static std::unique_ptr<TowerLevel> cache[limits::max_tower_level + 1];
        std::lock_guard<std::mutex> lock(mu);
        if (!cache[k]) cache[k] = std::unique_ptr<TowerLevel>(new TowerLevel(k));
        return *cache[k];
    }

    int k() const { return k_; }
    /// Field degree over Q: 2^k.
    std::size_t degree() const { return n_; }
    /// Minimal polynomial of theta_k: D_{2^k}, monic with integer coefficients.
    const RationalPoly& modulus() const { return modulus_; }
    /// theta_k = 2cos(pi/2^(k+1)) as a double.
    double theta_approx() const { return theta_; }

    /// Power-basis coefficients of D_j (j < 2^k), for basis conversions.
    /// Built lazily; conversion work is quadratic in the field degree.
    const std::vector<RationalPoly>& dilated_table() const {
        std::call_once(table_once_, [this] {
            std::vector<RationalPoly> t;
            t.reserve(n_);
            for (std::size_t j = 0; j < n_; ++j)
                t.push_back(RationalPoly(dilated_cheb_coeffs(j)));
            table_ = std::move(t);
        });
        return table_;
    }

    TowerLevel(const TowerLevel&) = delete;
    TowerLevel& operator=(const TowerLevel&) = delete;

private:
    explicit TowerLevel(int k)
        : k_(k),
          n_(std::size_t(1) << k),
          modulus_(RationalPoly(dilated_cheb_coeffs(std::size_t(1) << k))),
          theta_(2.0 * std::cos(std::acos(-1.0) / double(std::size_t(2) << k))) {
        verify_root();
    }

    // Numeric sanity check that theta_k is a root of the stored modulus:
    // relative residual |p(theta)| / sum_i |c_i theta^i| < 1e-12, evaluated in
    // 50-digit floating point (the terms cancel from magnitudes ~2^(2^k), far
    // beyond double range at deep levels).  theta is computed by the exact
    // nested-radical recurrence theta_k = sqrt(2 + theta_{k-1}).
    void verify_root() const {
        using BigFloat = boost::multiprecision::cpp_bin_float_50;
        BigFloat theta = 0;
        for (int i = 1; i <= k_; ++i) theta = sqrt(2 + theta);
        BigFloat acc = 0, mag = 0, power = 1;
        for (std::size_t i = 0; i <= std::size_t(modulus_.degree()); ++i) {
            const BigFloat c(numerator(modulus_.coeff(i)).str());
            acc += c * power;
            mag += abs(c * power);
            power *= theta;
        }
        // mag == 0 only at level 0 (every term is exactly zero there).
        if (mag != 0 ? (abs(acc) / mag > 1e-12) : (acc != 0))
            throw std::logic_error("tower: generator fails the numeric root check at level " +
                                   std::to_string(k_));
    }

    int k_;
    std::size_t n_;
    RationalPoly modulus_;
    double theta_;
    mutable std::once_flag table_once_;
    mutable std::vector<RationalPoly> table_;
};

// An element of F_k, stored as exact rational coordinates over the basis
// (1, D_1(theta), D_2(theta), ..., D_{2^k-1}(theta)).  This basis makes
// two_cos, lift and Galois action O(2^k) index maps; the theta-power
// coordinates remain available through power_coeffs()/from_power_coeffs()
// (exact triangular change of basis) and are the serialized form.
//
// Arithmetic requires both operands at the same level; mixing levels is a
// domain_error (callers lift explicitly, see lift() / to_common_level()).
// All values are immutable; every operation returns a fresh element.
class FieldElement {
public:
    /// Zero at level 0 (the rational 0).
    FieldElement() : level_(0), tc_(1, Rational(0)) {}

    /// The rational q embedded at the given level.
    FieldElement(int level, Rational q) : level_(level), tc_(TowerLevel::get(level).degree(), Rational(0)) {
        tc_[0] = std::move(q);
    }

    static FieldElement zero(int level) { return FieldElement(level, Rational(0)); }
    static FieldElement one(int level) { return FieldElement(level, Rational(1)); }

    /// The canonical generator theta_k = 2cos(pi/2^(k+1)) of level k
    /// (theta_0 = 0).
    static FieldElement theta(int level) {
        FieldElement e = zero(level);
        detail::add_dilated_term(e.tc_, 1, Rational(1));
        return e;
    }

    /// From dilated-Chebyshev-basis coordinates (length exactly 2^level).
    static FieldElement from_cheb_coeffs(int level, std::vector<Rational> tc) {
        if (tc.size() != TowerLevel::get(level).degree())
            throw std::domain_error("field: coefficient vector has wrong length");
        FieldElement e;
        e.level_ = level;
        e.tc_ = std::move(tc);
        return e;
    }

    /// From theta-power coordinates c_0 + c_1 theta + ... (length <= 2^level).
    static FieldElement from_power_coeffs(int level, const std::vector<Rational>& pc) {
        const TowerLevel& lv = TowerLevel::get(level);
        if (pc.size() > lv.degree())
            throw std::domain_error("field: power coefficient vector exceeds field degree");
        const auto& table = lv.dilated_table();
        std::vector<Rational> rem(pc);
        rem.resize(lv.degree(), Rational(0));
        std::vector<Rational> tc(lv.degree(), Rational(0));
        for (std::size_t d = lv.degree(); d-- > 1;) {
            if (rem[d] == 0) continue;
            const Rational c = rem[d];
            tc[d] = c;
            // Subtract c * D_d, clearing degree d exactly (D_d is monic).
            for (std::size_t i = 0; i <= d; ++i) {
                const Rational& td = table[d].coeff(i);
                if (td != 0) rem[i] -= c * td;
            }
        }
        tc[0] = rem[0];
        return from_cheb_coeffs(level, std::move(tc));
    }

    int level() const { return level_; }
    std::size_t field_degree() const { return tc_.size(); }
    const std::vector<Rational>& cheb_coeffs() const { return tc_; }

    /// Theta-power coordinates (position i = coefficient of theta^i).
    std::vector<Rational> power_coeffs() const {
        const auto& table = TowerLevel::get(level_).dilated_table();
        std::vector<Rational> pc(tc_.size(), Rational(0));
        pc[0] = tc_[0];
        for (std::size_t j = 1; j < tc_.size(); ++j) {
            if (tc_[j] == 0) continue;
            for (std::size_t i = 0; i <= j; ++i) {
                const Rational& td = table[j].coeff(i);
                if (td != 0) pc[i] += tc_[j] * td;
            }
        }
        return pc;
    }

    /// The element as a polynomial in theta (power basis).
    RationalPoly power_poly() const { return RationalPoly(power_coeffs()); }

    bool is_zero() const {
        for (const auto& c : tc_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t j = 1; j < tc_.size(); ++j)
            if (tc_[j] != 0) return false;
        return true;
    }
    /// The rational value of a rational element (error otherwise).
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("field: element is not rational");
        return tc_[0];
    }

    /// Numeric embedding into R: sum of tc_j * 2cos(j*pi/2^(k+1)).
    double real_value() const {
        const double phi = std::acos(-1.0) / double(std::size_t(2) << level_);
        double v = to_double(tc_[0]);
        for (std::size_t j = 1; j < tc_.size(); ++j)
            if (tc_[j] != 0) v += to_double(tc_[j]) * 2.0 * std::cos(double(j) * phi);
        return v;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check_levels(a, b, "add");
        std::vector<Rational> r(a.tc_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.tc_[i];
        return from_cheb_coeffs(a.level_, std::move(r));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check_levels(a, b, "sub");
        std::vector<Rational> r(a.tc_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.tc_[i];
        return from_cheb_coeffs(a.level_, std::move(r));
    }
    FieldElement operator-() const {
        std::vector<Rational> r(tc_);
        for (auto& c : r) c = -c;
        return from_cheb_coeffs(level_, std::move(r));
    }

    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check_levels(a, b, "mul");
        const std::size_t N = a.tc_.size();
        std::vector<Rational> r(N, Rational(0));
        if (a.tc_[0] != 0)
            for (std::size_t j = 0; j < N; ++j)
                if (b.tc_[j] != 0) r[j] += a.tc_[0] * b.tc_[j];
        if (b.tc_[0] != 0)
            for (std::size_t i = 1; i < N; ++i)
                if (a.tc_[i] != 0) r[i] += a.tc_[i] * b.tc_[0];
        for (std::size_t i = 1; i < N; ++i) {
            if (a.tc_[i] == 0) continue;
            for (std::size_t j = 1; j < N; ++j) {
                if (b.tc_[j] == 0) continue;
                const Rational p = a.tc_[i] * b.tc_[j];
                detail::add_dilated_term(r, (unsigned long long)(i + j), p);
                detail::add_dilated_term(r, (unsigned long long)(i > j ? i - j : j - i), p);
            }
        }
        return from_cheb_coeffs(a.level_, std::move(r));
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// theta-power representation against the level's minimal polynomial.
    FieldElement inverse() const {
        if (is_zero()) throw std::domain_error("field: division by zero");
        if (is_rational()) return FieldElement(level_, reciprocal(tc_[0]));
        const RationalPoly p = power_poly();
        const RationalPoly& m = TowerLevel::get(level_).modulus();
        auto [g, s, t] = extended_gcd(p, m);
        (void)t;
        if (g.degree() != 0)
            throw std::logic_error("field: minimal polynomial is not coprime to a nonzero element");
        // s*p === g (a nonzero constant) mod modulus; scale to make s*p === 1.
        const RationalPoly inv = reciprocal(g.coeff(0)) * divmod(s, m).second;
        return from_power_coeffs(level_, inv.coeffs());
    }

    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check_levels(a, b, "div");
        return a * b.inverse();
    }

    friend FieldElement operator*(const Rational& s, const FieldElement& e) {
        std::vector<Rational> r(e.tc_);
        for (auto& c : r) c *= s;
        return from_cheb_coeffs(e.level_, std::move(r));
    }
    friend FieldElement operator*(const FieldElement& e, const Rational& s) { return s * e; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        check_levels(a, b, "compare");
        return a.tc_ == b.tc_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

private:
    static void check_levels(const FieldElement& a, const FieldElement& b, const char* op) {
        if (a.level_ != b.level_)
            throw std::domain_error(std::string("field: level mismatch in ") + op + " (" +
                                    std::to_string(a.level_) + " vs " + std::to_string(b.level_) +
                                    "); lift the operands to a common level first");
    }

    int level_;
    std::vector<Rational> tc_;
};

/// Exact embedding of e into the (weakly) higher level `target`: substitutes
/// theta_j = D_{2^delta}(theta_target), which in the Chebyshev basis is the
/// index map D_i -> D_{i * 2^delta} (a ring homomorphism; O(2^k)).
inline FieldElement lift(const FieldElement& e, int target) {
    if (target < e.level())
        throw std::domain_error("field: cannot lift level " + std::to_string(e.level()) +
                                " down to " + std::to_string(target));
    if (target == e.level()) return e;
    const std::size_t stride = std::size_t(1) << (target - e.level());
    std::vector<Rational> tc(TowerLevel::get(target).degree(), Rational(0));
    const auto& src = e.cheb_coeffs();
    tc[0] = src[0];
    for (std::size_t j = 1; j < src.size(); ++j) tc[j * stride] = src[j];
    return FieldElement::from_cheb_coeffs(target, std::move(tc));
}

/// Lift both operands to their common (maximum) level.
inline std::pair<FieldElement, FieldElement> to_common_level(const FieldElement& a,
                                                             const FieldElement& b) {
    const int k = std::max(a.level(), b.level());
    return {lift(a, k), lift(b, k)};
}

inline FieldElement lifted_add(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = to_common_level(a, b);
    return x + y;
}
inline FieldElement lifted_sub(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = to_common_level(a, b);
    return x - y;
}
inline FieldElement lifted_mul(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = to_common_level(a, b);
    return x * y;
}
inline FieldElement lifted_div(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = to_common_level(a, b);
    return x / y;
}
inline bool lifted_eq(const FieldElement& a, const FieldElement& b) {
    auto [x, y] = to_common_level(a, b);
    return x == y;
}

inline FieldElement pow(const FieldElement& e, unsigned n) {
    FieldElement acc = FieldElement::one(e.level());
    for (unsigned i = 0; i < n; ++i) acc = acc * e;
    return acc;
}

/// 2cos(r*pi) for dyadic r = m/2^j in [0, 1], as an exact element of the
/// minimal level that contains it (level j-1 for 0 < r < 1; the endpoints
/// give the rationals 2 and -2, and r = 1/2 gives 0 at level 0).
inline FieldElement two_cos(const Dyadic& r) {
    if (r.is_zero()) return FieldElement(0, Rational(2));
    if (r.is_one()) return FieldElement(0, Rational(-2));
    const int level = r.log2_den() - 1;
    FieldElement e = FieldElement::zero(level);
    std::vector<Rational> tc = e.cheb_coeffs();
    detail::add_dilated_term(tc, (unsigned long long)(r.num()), Rational(1));
    return FieldElement::from_cheb_coeffs(level, std::move(tc));
}

/// Evaluate a rational polynomial at a field element (exact Horner).
inline FieldElement eval_poly(const RationalPoly& p, const FieldElement& x) {
    FieldElement acc = FieldElement::zero(x.level());
    for (std::size_t i = p.coeffs().size(); i-- > 0;)
        acc = acc * x + FieldElement(x.level(), p.coeff(i));
    return acc;
}

// Poly<FieldElement> coefficients may sit at different levels (integer
// Chebyshev coefficients stay rational); every pairwise operation lifts to
// the common level first.
template <>
struct coeff_ops<FieldElement> {
    static FieldElement zero() { return FieldElement(); }
    static bool is_zero(const FieldElement& c) { return c.is_zero(); }
    static FieldElement add(const FieldElement& a, const FieldElement& b) { return lifted_add(a, b); }
    static FieldElement sub(const FieldElement& a, const FieldElement& b) { return lifted_sub(a, b); }
    static FieldElement mul(const FieldElement& a, const FieldElement& b) { return lifted_mul(a, b); }
    static FieldElement div(const FieldElement& a, const FieldElement& b) { return lifted_div(a, b); }
    static FieldElement neg(const FieldElement& a) { return -a; }
    static bool eq(const FieldElement& a, const FieldElement& b) { return lifted_eq(a, b); }
};

using FieldPoly = Poly<FieldElement>;

/// Embed a rational polynomial as a FieldPoly (level-0 coefficients).
inline FieldPoly to_field_poly(const RationalPoly& p) {
    std::vector<FieldElement> c;
    c.reserve(p.coeffs().size());
    for (const auto& q : p.coeffs()) c.emplace_back(0, q);
    return FieldPoly(std::move(c));
}

/// Nested-radical rendering of 2cos(t*pi) for dyadic t, via
/// 2cos(t*pi) = sqrt(2 + 2cos(2t*pi)) for t < 1/2 and reflection beyond.
/// Examples: t=1/4 -> "√2", t=1/8 -> "√(2+√2)", t=3/8 -> "√(2-√2)".
inline std::string surd_two_cos(const Dyadic& t) {
    if (t.is_zero()) return "2";
    if (t.is_one()) return "-2";
    if (t == Dyadic(1, 1)) return "0";
    if (Dyadic(1, 1) < t) return "-" + surd_two_cos(t.complement());
    const std::string inner = surd_two_cos(Dyadic(t.num(), t.log2_den() - 1));
    if (inner == "0") return "√2";
    if (inner[0] == '-') return "√(2-" + inner.substr(1) + ")";
    return "√(2+" + inner + ")";
}

/// Nested radical for the level generator theta_k.
inline std::string theta_surd(int level) { return surd_two_cos(Dyadic(1, level + 1)); }

/// "(c0, c1, ...)" power-coefficient display used by the CLI.
inline std::string power_coeff_string(const FieldElement& e) {
    const auto pc = e.power_coeffs();
    std::string out = "(";
    for (std::size_t i = 0; i < pc.size(); ++i) {
        if (i) out += ", ";
        out += rational_to_short_string(pc[i]);
    }
    return out + ")";
}

/// The element as a polynomial in theta, e.g. "θ^2 - 2".
inline std::string theta_poly_string(const FieldElement& e) {
    return poly_to_string(e.power_poly(), "θ");
}

} // namespace algdct
