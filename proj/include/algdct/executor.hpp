#pragma once

#include "algdct/chebyshev.hpp"
#include "algdct/plan.hpp"
#include "algdct/tower.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algdct {

// ---------------------------------------------------------------------------
// Operation counting
// ---------------------------------------------------------------------------

struct OpCount {
    unsigned long long mults = 0;
    unsigned long long adds = 0;

    OpCount& operator+=(const OpCount& o) {
        mults += o.mults;
        adds += o.adds;
        return *this;
    }
    friend OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
    friend bool operator==(const OpCount& a, const OpCount& b) {
        return a.mults == b.mults && a.adds == b.adds;
    }
    friend bool operator!=(const OpCount& a, const OpCount& b) { return !(a == b); }
};

/// Count real multiplications and additions of a plan.  Multiplications by
/// 0, 1, or -1 are free; the test for that is exact (a dyadic-angle cosine is
/// rational only at angles 0, 1/2, 1).  Permutations and copies are free.
inline OpCount count_ops(const TransformPlan& plan) {
    OpCount c;
    for (const Stage& st : plan.stages) {
        switch (st.kind) {
            case StageKind::identity:
            case StageKind::permutation:
                break;
            case StageKind::add_scale_block:
                c.adds += st.half;
                if (st.scalar.is_costly()) c.mults += st.half;
                break;
            case StageKind::butterfly_pair:
            case StageKind::dct2_merge:
                c.adds += 2 * st.half;
                break;
            case StageKind::block_split:
                for (const TransformPlan& child : st.children) c += count_ops(child);
                break;
            case StageKind::diagonal:
                for (const PlanScalar& d : st.entries)
                    if (d.is_costly()) ++c.mults;
                break;
        }
    }
    return c;
}

/// Closed-form operation counts the recursive plans are expected to achieve.
inline OpCount expected_ops(TransformKind kind, std::size_t n) {
    const unsigned long long lg = (unsigned long long)detail::log2_exact(n);
    const unsigned long long N = n;
    OpCount c;
    switch (kind) {
        case TransformKind::dct4_poly:
            c.mults = N / 2 * lg;
            c.adds = 3 * N / 2 * lg;
            break;
        case TransformKind::dct4:
            c = expected_ops(TransformKind::dct4_poly, n);
            c.mults += N;
            break;
        case TransformKind::dct2_poly:
            if (n == 1) break;
            // lg >= 1; the (lg - 2) factor is negative at n = 2, so compute
            // in signed arithmetic before converting.
            c.mults = (unsigned long long)((long long)(N / 2) * ((long long)lg - 2) + 1);
            c.adds = (unsigned long long)(3 * (long long)(N / 2) * ((long long)lg - 2) +
                                          2 * (long long)N + 1);
            break;
        case TransformKind::dct2:
            c = expected_ops(TransformKind::dct2_poly, n);
            c.mults += N - 1;
            break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Exact application
// ---------------------------------------------------------------------------

namespace detail {

inline void apply_plan_exact(const TransformPlan& plan, std::vector<FieldElement>& v,
                             std::size_t off) {
    for (const Stage& st : plan.stages) {
        switch (st.kind) {
            case StageKind::identity:
                break;
            case StageKind::add_scale_block: {
                const std::size_t m = st.half;
                for (std::size_t i = 0; i < m; ++i)
                    v[off + i] = lifted_sub(v[off + i], v[off + 2 * m - 1 - i]);
                if (st.scalar.is_rational()) {
                    const Rational a = st.scalar.rational_value();
                    for (std::size_t i = 0; i < m; ++i) v[off + m + i] = a * v[off + m + i];
                } else {
                    const FieldElement a = st.scalar.to_field();
                    for (std::size_t i = 0; i < m; ++i)
                        v[off + m + i] = lifted_mul(a, v[off + m + i]);
                }
                break;
            }
            case StageKind::butterfly_pair: {
                const std::size_t m = st.half;
                for (std::size_t i = 0; i < m; ++i) {
                    FieldElement s = lifted_add(v[off + i], v[off + m + i]);
                    FieldElement d = lifted_sub(v[off + i], v[off + m + i]);
                    v[off + i] = std::move(s);
                    v[off + m + i] = std::move(d);
                }
                break;
            }
            case StageKind::dct2_merge: {
                const std::size_t m = st.half;
                // Gather the reversed upper half first: the writes to the
                // upper half would otherwise clobber later reads.
                std::vector<FieldElement> rev(m);
                for (std::size_t i = 0; i < m; ++i) rev[i] = v[off + 2 * m - 1 - i];
                for (std::size_t i = 0; i < m; ++i) {
                    FieldElement s = lifted_add(v[off + i], rev[i]);
                    FieldElement d = lifted_sub(v[off + i], rev[i]);
                    v[off + i] = std::move(s);
                    v[off + m + i] = std::move(d);
                }
                break;
            }
            case StageKind::block_split: {
                std::size_t child_off = off;
                for (const TransformPlan& child : st.children) {
                    apply_plan_exact(child, v, child_off);
                    child_off += child.size;
                }
                break;
            }
            case StageKind::permutation: {
                std::vector<FieldElement> tmp(st.perm.size());
                for (std::size_t i = 0; i < st.perm.size(); ++i)
                    tmp[i] = std::move(v[off + st.perm[i]]);
                for (std::size_t i = 0; i < st.perm.size(); ++i) v[off + i] = std::move(tmp[i]);
                break;
            }
            case StageKind::diagonal: {
                for (std::size_t i = 0; i < st.entries.size(); ++i) {
                    const PlanScalar& d = st.entries[i];
                    if (d.is_one()) continue;
                    if (d.is_rational())
                        v[off + i] = d.rational_value() * v[off + i];
                    else
                        v[off + i] = lifted_mul(d.to_field(), v[off + i]);
                }
                break;
            }
        }
    }
}

} // namespace detail

/// Apply a plan exactly.  Input entries may live at any tower levels; mixed
/// levels are lifted pairwise as needed.
inline std::vector<FieldElement> apply(const TransformPlan& plan, std::vector<FieldElement> x) {
    if (x.size() != plan.size)
        throw std::domain_error("executor: input length " + std::to_string(x.size()) +
                                " does not match plan size " + std::to_string(plan.size));
    detail::apply_plan_exact(plan, x, 0);
    return x;
}

/// Apply a plan exactly to a rational input vector.
inline std::vector<FieldElement> apply(const TransformPlan& plan, const std::vector<Rational>& x) {
    std::vector<FieldElement> v;
    v.reserve(x.size());
    for (const Rational& r : x) v.emplace_back(0, r);
    return algdct::apply(plan, std::move(v));
}

/// Exact matrix of the plan, column by column (entry (i, j) = i-th output for
/// the j-th unit input).
inline std::vector<std::vector<FieldElement>> materialize(const TransformPlan& plan) {
    const std::size_t n = plan.size;
    std::vector<std::vector<FieldElement>> mat(n, std::vector<FieldElement>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<FieldElement> e(n);
        e[j] = FieldElement::one(0);
        const std::vector<FieldElement> col = algdct::apply(plan, std::move(e));
        for (std::size_t i = 0; i < n; ++i) mat[i][j] = col[i];
    }
    return mat;
}

// ---------------------------------------------------------------------------
// Floating-point application
// ---------------------------------------------------------------------------

// A plan compiled to a flat double-precision program: the block recursion is
// flattened to absolute offsets and all constants are resolved once.
class FloatPlan {
public:
    explicit FloatPlan(const TransformPlan& plan) : size_(plan.size) { flatten(plan, 0); }

    std::size_t size() const { return size_; }

    void apply_inplace(double* v) const {
        std::vector<double> scratch(size_);
        for (const FOp& op : ops_) {
            double* p = v + op.off;
            const std::size_t m = op.half;
            switch (op.kind) {
                case StageKind::add_scale_block:
                    for (std::size_t i = 0; i < m; ++i) p[i] -= p[2 * m - 1 - i];
                    for (std::size_t i = 0; i < m; ++i) p[m + i] *= op.a;
                    break;
                case StageKind::butterfly_pair:
                    for (std::size_t i = 0; i < m; ++i) {
                        const double s = p[i] + p[m + i];
                        const double d = p[i] - p[m + i];
                        p[i] = s;
                        p[m + i] = d;
                    }
                    break;
                case StageKind::dct2_merge:
                    for (std::size_t i = 0; i < m; ++i) scratch[i] = p[2 * m - 1 - i];
                    for (std::size_t i = 0; i < m; ++i) {
                        const double s = p[i] + scratch[i];
                        const double d = p[i] - scratch[i];
                        p[i] = s;
                        p[m + i] = d;
                    }
                    break;
                case StageKind::permutation:
                    for (std::size_t i = 0; i < op.table.size(); ++i)
                        scratch[i] = p[op.table[i]];
                    for (std::size_t i = 0; i < op.table.size(); ++i) p[i] = scratch[i];
                    break;
                case StageKind::diagonal:
                    for (std::size_t i = 0; i < op.diag.size(); ++i) p[i] *= op.diag[i];
                    break;
                default:
                    break;
            }
        }
    }

    std::vector<double> apply(std::vector<double> x) const {
        if (x.size() != size_)
            throw std::domain_error("executor: input length does not match plan size");
        apply_inplace(x.data());
        return x;
    }

private:
    struct FOp {
        StageKind kind;
        std::size_t off = 0;
        std::size_t half = 0;
        double a = 0.0;
        std::vector<std::size_t> table;
        std::vector<double> diag;
    };

    void flatten(const TransformPlan& plan, std::size_t off) {
        for (const Stage& st : plan.stages) {
            switch (st.kind) {
                case StageKind::identity:
                    break;
                case StageKind::add_scale_block: {
                    FOp op{st.kind, off, st.half, st.scalar.to_double(), {}, {}};
                    ops_.push_back(std::move(op));
                    break;
                }
                case StageKind::butterfly_pair:
                case StageKind::dct2_merge:
                    ops_.push_back(FOp{st.kind, off, st.half, 0.0, {}, {}});
                    break;
                case StageKind::block_split: {
                    std::size_t child_off = off;
                    for (const TransformPlan& child : st.children) {
                        flatten(child, child_off);
                        child_off += child.size;
                    }
                    break;
                }
                case StageKind::permutation:
                    ops_.push_back(FOp{st.kind, off, 0, 0.0, st.perm, {}});
                    break;
                case StageKind::diagonal: {
                    FOp op{st.kind, off, 0, 0.0, {}, {}};
                    op.diag.reserve(st.entries.size());
                    for (const PlanScalar& d : st.entries) op.diag.push_back(d.to_double());
                    ops_.push_back(std::move(op));
                    break;
                }
            }
        }
    }

    std::size_t size_;
    std::vector<FOp> ops_;
};

// ---------------------------------------------------------------------------
// Independent oracles
// ---------------------------------------------------------------------------

namespace detail {

/// Exact transform row: (V_0(x), ..., V_{n-1}(x)) at x = cos(t pi), computed
/// from y = 2cos(t pi) by the recurrence V_0 = 1, V_1 = y - 1,
/// V_l = y V_{l-1} - V_{l-2}.
inline std::vector<FieldElement> v_basis_row(const Dyadic& t, std::size_t n) {
    const FieldElement y = two_cos(t);
    const int lvl = y.level();
    std::vector<FieldElement> row;
    row.reserve(n);
    row.push_back(FieldElement::one(lvl));
    if (n > 1) row.push_back(y - FieldElement::one(lvl));
    for (std::size_t l = 2; l < n; ++l) row.push_back(y * row[l - 1] - row[l - 2]);
    return row;
}

inline std::vector<Dyadic> oracle_angles(const TransformPlan& plan) {
    switch (plan.transform) {
        case TransformKind::dct4_poly:
            return root_angles_dct4_skew(plan.size, plan.skew.value());
        case TransformKind::dct4:
            return root_angles_dct4_skew(plan.size, Dyadic(1, 1));
        case TransformKind::dct2_poly:
        case TransformKind::dct2:
            return root_angles_dct2(plan.size);
    }
    throw std::logic_error("executor: unknown transform kind");
}

} // namespace detail

/// Exact reference matrix for a plan's transform, built independently of the
/// factorization: row k is the V-polynomial basis evaluated at the k-th root,
/// scaled for the cosine kinds by the closed-form diagonal.
inline std::vector<std::vector<FieldElement>> exact_oracle_matrix(const TransformPlan& plan) {
    const std::size_t n = plan.size;
    if (n > limits::max_exact_verify_n)
        throw std::domain_error("executor: exact oracle limited to size " +
                                std::to_string(limits::max_exact_verify_n));
    const std::vector<Dyadic> angles = detail::oracle_angles(plan);
    const int j = detail::log2_exact(n);
    std::vector<std::vector<FieldElement>> mat;
    mat.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<FieldElement> row = detail::v_basis_row(angles[k], n);
        if (plan.transform == TransformKind::dct4 || plan.transform == TransformKind::dct2) {
            const Dyadic scale_angle = plan.transform == TransformKind::dct4
                                           ? Dyadic(std::int64_t(2 * k + 1), j + 2)
                                           : Dyadic(std::int64_t(k), j + 1);
            const FieldElement s = cos_of(scale_angle);
            for (FieldElement& e : row) e = lifted_mul(s, e);
        }
        mat.push_back(std::move(row));
    }
    return mat;
}

// Closed-form double-precision reference entries, evaluated in long double.
class FloatOracle {
public:
    explicit FloatOracle(const TransformPlan& plan)
        : kind_(plan.transform), n_(plan.size) {
        if (kind_ == TransformKind::dct4_poly || kind_ == TransformKind::dct2_poly) {
            angles_.reserve(n_);
            for (const Dyadic& t : detail::oracle_angles(plan))
                angles_.push_back(static_cast<long double>(to_double(t.to_rational())));
        }
    }

    std::size_t size() const { return n_; }

    double entry(std::size_t row, std::size_t col) const {
        constexpr long double pi = std::numbers::pi_v<long double>;
        const long double r = static_cast<long double>(row);
        const long double c = static_cast<long double>(col);
        const long double n = static_cast<long double>(n_);
        switch (kind_) {
            case TransformKind::dct4:
                return static_cast<double>(
                    std::cos(pi * (2 * r + 1) * (2 * c + 1) / (4 * n)));
            case TransformKind::dct2:
                return static_cast<double>(std::cos(pi * r * (2 * c + 1) / (2 * n)));
            case TransformKind::dct4_poly:
            case TransformKind::dct2_poly: {
                const long double a = angles_[row];
                return static_cast<double>(std::cos(pi * (2 * c + 1) * a / 2) /
                                           std::cos(pi * a / 2));
            }
        }
        throw std::logic_error("executor: unknown transform kind");
    }

private:
    TransformKind kind_;
    std::size_t n_;
    std::vector<long double> angles_;
};

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

// Outcome of a verification run; mismatches are reported as data, not thrown.
struct VerifyReport {
    bool pass = false;
    bool exact = false;
    std::size_t size = 0;
    std::size_t entries_checked = 0;
    double max_abs_error = 0.0;  // float mode
    double tolerance = 0.0;      // float mode
    std::string failure;         // empty when pass

    std::string summary() const {
        std::ostringstream os;
        os << (pass ? "PASS" : "FAIL") << " (" << (exact ? "exact" : "float") << ", n=" << size
           << ", " << entries_checked << " entries";
        if (!exact) os << ", max |err| = " << max_abs_error << ", tol = " << tolerance;
        os << ")";
        if (!failure.empty()) os << " — " << failure;
        return os.str();
    }
};

/// Compare the materialized plan with the exact reference matrix, entry by
/// entry, with no tolerance.  Limited to small sizes by design.
inline VerifyReport verify_exact(const TransformPlan& plan) {
    VerifyReport rep;
    rep.exact = true;
    rep.size = plan.size;
    const auto got = materialize(plan);
    const auto want = exact_oracle_matrix(plan);
    rep.pass = true;
    for (std::size_t i = 0; i < plan.size; ++i)
        for (std::size_t j = 0; j < plan.size; ++j) {
            ++rep.entries_checked;
            if (!lifted_eq(got[i][j], want[i][j])) {
                rep.pass = false;
                if (rep.failure.empty()) {
                    std::ostringstream os;
                    os << "entry (" << i << ", " << j << "): plan gives "
                       << power_coeff_string(got[i][j]) << ", reference gives "
                       << power_coeff_string(want[i][j]);
                    rep.failure = os.str();
                }
            }
        }
    return rep;
}

/// Compare the compiled float plan against the closed-form reference matrix,
/// streaming one unit-vector column at a time (no n-by-n storage).
inline VerifyReport verify_float(const TransformPlan& plan, double tolerance) {
    VerifyReport rep;
    rep.exact = false;
    rep.size = plan.size;
    rep.tolerance = tolerance;
    const FloatPlan fp(plan);
    const FloatOracle oracle(plan);
    const std::size_t n = plan.size;
    std::vector<double> col(n);
    rep.pass = true;
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(col.begin(), col.end(), 0.0);
        col[j] = 1.0;
        fp.apply_inplace(col.data());
        for (std::size_t i = 0; i < n; ++i) {
            ++rep.entries_checked;
            const double err = std::abs(col[i] - oracle.entry(i, j));
            if (err > rep.max_abs_error) rep.max_abs_error = err;
            if (err > tolerance && rep.pass) {
                rep.pass = false;
                std::ostringstream os;
                os << "entry (" << i << ", " << j << "): plan gives " << col[i]
                   << ", reference gives " << oracle.entry(i, j) << " (err " << err << ")";
                rep.failure = os.str();
            }
        }
    }
    rep.pass = rep.max_abs_error <= tolerance;
    return rep;
}

} // namespace algdct
