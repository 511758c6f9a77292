#pragma once

#include "algdct/chebyshev.hpp"
#include "algdct/dyadic.hpp"
#include "algdct/rational.hpp"
#include "algdct/tower.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algdct {

namespace detail {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline int log2_exact(std::size_t n) {
    if (!is_power_of_two(n)) throw std::domain_error("plan: size must be a power of two");
    int k = 0;
    while ((std::size_t(1) << k) < n) ++k;
    return k;
}

} // namespace detail

// A scalar constant of a plan, kept in the symbolic form
//     value = scale * 2cos(angle * pi),   angle dyadic in [0, 1], scale rational.
// This is exact (convertible to a FieldElement on demand) yet cheap to carry
// around and to approximate, independent of how deep in the tower the value
// lives.  Rational values (angle in {0, 1/2, 1}, by Niven's theorem the only
// dyadic angles with rational cosine) are canonicalized to angle = 0.
class PlanScalar {
public:
    PlanScalar() : angle_(0, 0), scale_(0) {}

    PlanScalar(const Dyadic& angle, const Rational& scale) : angle_(angle), scale_(scale) {
        if (scale_ == 0) { angle_ = Dyadic(0, 0); return; }
        if (angle_.is_zero()) return;
        if (angle_.is_one()) { angle_ = Dyadic(0, 0); scale_ = -scale_; return; }
        if (angle_ == Dyadic(1, 1)) { angle_ = Dyadic(0, 0); scale_ = 0; }
    }

    static PlanScalar two_cos_of(const Dyadic& t) { return PlanScalar(t, Rational(1)); }
    static PlanScalar cos_of(const Dyadic& t) { return PlanScalar(t, make_rational(1, 2)); }
    static PlanScalar from_rational(const Rational& v) {
        return PlanScalar(Dyadic(0, 0), v / 2);
    }

    const Dyadic& angle() const { return angle_; }
    const Rational& scale() const { return scale_; }

    bool is_rational() const { return angle_.is_zero(); }
    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("plan: scalar is irrational");
        return scale_ * 2;
    }
    bool is_zero() const { return is_rational() && scale_ == 0; }
    bool is_one() const { return is_rational() && scale_ * 2 == 1; }
    bool is_minus_one() const { return is_rational() && scale_ * 2 == -1; }
    /// True when multiplying by this value costs a real multiplication
    /// (i.e. the value is not 0, 1, or -1).
    bool is_costly() const { return !is_zero() && !is_one() && !is_minus_one(); }

    /// Tower level of the exact value.
    int level() const { return angle_.is_zero() ? 0 : angle_.log2_den() - 1; }

    FieldElement to_field() const { return scale_ * two_cos(angle_); }

    double to_double() const {
        if (is_rational()) return algdct::to_double(scale_) * 2.0;
        const long double t = static_cast<long double>(algdct::to_double(angle_.to_rational()));
        const long double c = 2.0L * std::cos(std::numbers::pi_v<long double> * t);
        return static_cast<double>(static_cast<long double>(algdct::to_double(scale_)) * c);
    }

    /// Exact human-readable form, e.g. "√2", "1/2*√(2+√2)", "3".
    std::string exact_string() const {
        if (is_rational()) return rational_to_short_string(rational_value());
        const std::string surd = surd_two_cos(angle_);
        if (scale_ == 1) return surd;
        if (scale_ == -1) return surd[0] == '-' ? surd.substr(1) : "-" + surd;
        return rational_to_short_string(scale_) + "*" + surd;
    }

    friend bool operator==(const PlanScalar& a, const PlanScalar& b) {
        return a.angle_ == b.angle_ && a.scale_ == b.scale_;
    }
    friend bool operator!=(const PlanScalar& a, const PlanScalar& b) { return !(a == b); }

private:
    Dyadic angle_;
    Rational scale_;
};

struct TransformPlan;

enum class StageKind {
    identity,        // size-1 terminal
    add_scale_block, // [I -J; 0 aI]: lower half also folds the reversed upper half
    butterfly_pair,  // [I I; I -I]
    dct2_merge,      // [I J; I -J]
    block_split,     // block-diagonal pair of child plans
    permutation,     // y[i] = x[perm[i]]
    diagonal,        // y[i] = d[i] * x[i]
};

inline const char* stage_kind_name(StageKind k) {
    switch (k) {
        case StageKind::identity: return "identity";
        case StageKind::add_scale_block: return "add_scale_block";
        case StageKind::butterfly_pair: return "butterfly_pair";
        case StageKind::dct2_merge: return "dct2_merge";
        case StageKind::block_split: return "block_split";
        case StageKind::permutation: return "permutation";
        case StageKind::diagonal: return "diagonal";
    }
    throw std::logic_error("plan: unknown stage kind");
}

// One linear step of a plan, applied input-first (stages[0] touches the
// input).  Only the fields of the active kind are meaningful.
struct Stage {
    StageKind kind = StageKind::identity;
    std::size_t half = 0;                  // add_scale_block, butterfly_pair, dct2_merge
    PlanScalar scalar;                     // add_scale_block
    std::vector<TransformPlan> children;   // block_split (exactly two)
    std::vector<std::size_t> perm;         // permutation
    std::vector<PlanScalar> entries;       // diagonal
};

enum class TransformKind { dct4_poly, dct4, dct2_poly, dct2 };

inline const char* transform_kind_name(TransformKind k) {
    switch (k) {
        case TransformKind::dct4_poly: return "dct4_poly";
        case TransformKind::dct4: return "dct4";
        case TransformKind::dct2_poly: return "dct2_poly";
        case TransformKind::dct2: return "dct2";
    }
    throw std::logic_error("plan: unknown transform kind");
}

// A complete factored transform: the composition stages[last] ∘ ... ∘ stages[0],
// acting on vectors of length `size`.
struct TransformPlan {
    TransformKind transform = TransformKind::dct4_poly;
    std::size_t size = 1;
    std::optional<Dyadic> skew;   // dct4_poly only
    std::vector<Stage> stages;
};

/// Plan for the polynomial-algebra transform behind a skewed DCT-4: evaluation
/// of a coefficient vector at the n roots of D_n(x) - 2cos(r pi), listed by
/// increasing root angle.  Size n = 2m splits into an add/scale fold, a
/// butterfly, two half-size recursions at skews r/2 and 1 - r/2, and the
/// angle-sorting permutation.
inline TransformPlan plan_dct4_poly(std::size_t n, const Dyadic& r) {
    if (!detail::is_power_of_two(n))
        throw std::domain_error("plan: size must be a power of two");
    if (r.is_endpoint())
        throw std::domain_error("plan: skew must lie strictly in (0, 1)");
    TransformPlan plan;
    plan.transform = TransformKind::dct4_poly;
    plan.size = n;
    plan.skew = r;
    if (n == 1) {
        plan.stages.push_back(Stage{});
        return plan;
    }
    const std::size_t m = n / 2;
    const Dyadic r_minus = r.half();
    const Dyadic r_plus = r.one_minus_half();

    Stage fold;
    fold.kind = StageKind::add_scale_block;
    fold.half = m;
    fold.scalar = PlanScalar::two_cos_of(r_minus);
    plan.stages.push_back(std::move(fold));

    Stage bfly;
    bfly.kind = StageKind::butterfly_pair;
    bfly.half = m;
    plan.stages.push_back(std::move(bfly));

    Stage split;
    split.kind = StageKind::block_split;
    split.children.push_back(plan_dct4_poly(m, r_minus));
    split.children.push_back(plan_dct4_poly(m, r_plus));
    plan.stages.push_back(std::move(split));

    // Merge the children's sorted root angles back into the parent's sorted
    // order: output i takes the concatenated-children entry with the i-th
    // smallest angle.
    const std::vector<Dyadic> minus_angles = root_angles_dct4_skew(m, r_minus);
    const std::vector<Dyadic> plus_angles = root_angles_dct4_skew(m, r_plus);
    Stage perm;
    perm.kind = StageKind::permutation;
    perm.perm.reserve(n);
    std::size_t a = 0, b = 0;
    while (a < m || b < m) {
        if (b == m || (a < m && minus_angles[a] < plus_angles[b]))
            perm.perm.push_back(a++);
        else
            perm.perm.push_back(m + b++);
    }
    plan.stages.push_back(std::move(perm));
    return plan;
}

/// Plan for the orthogonal-cosine DCT-4 of size n: the polynomial plan at the
/// central skew followed by the output scaling diag(cos((2i+1)pi/4n)).
inline TransformPlan plan_dct4(std::size_t n) {
    TransformPlan plan = plan_dct4_poly(n, Dyadic(1, 1));
    plan.transform = TransformKind::dct4;
    plan.skew.reset();
    Stage diag;
    diag.kind = StageKind::diagonal;
    diag.entries.reserve(n);
    const int j = detail::log2_exact(n);
    for (std::size_t i = 0; i < n; ++i)
        diag.entries.push_back(PlanScalar::cos_of(Dyadic(std::int64_t(2 * i + 1), j + 2)));
    plan.stages.push_back(std::move(diag));
    return plan;
}

/// Plan for the polynomial-algebra transform behind the DCT-2: evaluation at
/// the angles i/n (increasing), normalized so that row 0 is all ones.  Size
/// n = 2m splits by the reflection merge into a half-size copy of itself
/// (even outputs) and a central-skew dct4 polynomial plan (odd outputs).
inline TransformPlan plan_dct2_poly(std::size_t n) {
    if (!detail::is_power_of_two(n))
        throw std::domain_error("plan: size must be a power of two");
    TransformPlan plan;
    plan.transform = TransformKind::dct2_poly;
    plan.size = n;
    if (n == 1) {
        plan.stages.push_back(Stage{});
        return plan;
    }
    const std::size_t m = n / 2;

    Stage merge;
    merge.kind = StageKind::dct2_merge;
    merge.half = m;
    plan.stages.push_back(std::move(merge));

    Stage split;
    split.kind = StageKind::block_split;
    split.children.push_back(plan_dct2_poly(m));
    split.children.push_back(plan_dct4_poly(m, Dyadic(1, 1)));
    plan.stages.push_back(std::move(split));

    // Children interleave: even output angles 2i/n come from the dct2 child,
    // odd angles (2i+1)/n from the dct4 child.
    Stage perm;
    perm.kind = StageKind::permutation;
    perm.perm.resize(n);
    for (std::size_t i = 0; i < m; ++i) {
        perm.perm[2 * i] = i;
        perm.perm[2 * i + 1] = m + i;
    }
    plan.stages.push_back(std::move(perm));
    return plan;
}

/// Plan for the orthogonal-cosine DCT-2 of size n (unnormalized rows): the
/// polynomial plan followed by diag(cos(i*pi/2n)); the first entry is 1.
inline TransformPlan plan_dct2(std::size_t n) {
    TransformPlan plan = plan_dct2_poly(n);
    plan.transform = TransformKind::dct2;
    Stage diag;
    diag.kind = StageKind::diagonal;
    diag.entries.reserve(n);
    const int j = detail::log2_exact(n);
    for (std::size_t i = 0; i < n; ++i)
        diag.entries.push_back(PlanScalar::cos_of(Dyadic(std::int64_t(i), j + 1)));
    plan.stages.push_back(std::move(diag));
    return plan;
}

} // namespace algdct
