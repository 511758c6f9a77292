#pragma once

#include "algdct/config.hpp"
#include "algdct/dyadic.hpp"
#include "algdct/tower.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace algdct {

// An automorphism of F_k = Q(theta_k) over Q, determined by where theta goes.
// The image must be a root of the level's minimal polynomial; construction is
// through GaloisGroup, which checks exactly that.
struct Automorphism {
    int level = 0;
    int index = 0;          // sigma_index: theta -> 2cos((2*index+1) pi / 2^(k+1))
    FieldElement image;     // exact image of theta

    bool is_identity() const { return index == 0; }
    std::string name() const { return "σ" + std::to_string(index); }
};

/// Apply an automorphism to an element of the same level (a ring
/// homomorphism; exact).  For the canonical generators the image is a single
/// Chebyshev-basis term ±D_s, and the action is the index map
/// D_j -> (±1)^j D_{js}; a general image falls back to exact Horner
/// substitution on the power form.
inline FieldElement apply_automorphism(const Automorphism& a, const FieldElement& e) {
    if (a.level != e.level())
        throw std::domain_error("galois: automorphism level " + std::to_string(a.level) +
                                " does not match element level " + std::to_string(e.level()));
    const auto& img = a.image.cheb_coeffs();
    const std::size_t N = img.size();
    // Fast path: image = sign * D_s.
    std::size_t s = 0;
    int sign = 0;
    bool single = img[0] == 0;
    for (std::size_t j = 1; single && j < N; ++j) {
        if (img[j] == 0) continue;
        if (s != 0 || (img[j] != 1 && img[j] != -1)) single = false;
        else { s = j; sign = img[j] == 1 ? 1 : -1; }
    }
    if (single && s != 0) {
        const auto& src = e.cheb_coeffs();
        std::vector<Rational> r(N, Rational(0));
        r[0] = src[0];
        for (std::size_t j = 1; j < N; ++j) {
            if (src[j] == 0) continue;
            const bool flip = sign < 0 && (j % 2 == 1);
            detail::add_dilated_term(r, (unsigned long long)j * s, flip ? -src[j] : src[j]);
        }
        return FieldElement::from_cheb_coeffs(e.level(), std::move(r));
    }
    if (a.image.is_rational() && N == 1) return e; // level 0: only the identity
    return eval_poly(e.power_poly(), a.image);
}

// The Galois group of F_k / Q: cyclic of order 2^k.  sigma_i is labeled by
// increasing angle of its image root (sigma_0 = identity), and the Cayley
// table is built by exact composition + exact root matching.
class GaloisGroup {
public:
    static GaloisGroup build(int k) {
        if (k < 0 || k > limits::max_galois_level)
            throw std::domain_error("galois: level " + std::to_string(k) + " outside [0, " +
                                    std::to_string(limits::max_galois_level) + "]");
        GaloisGroup g;
        g.level_ = k;
        const std::size_t N = TowerLevel::get(k).degree();
        const RationalPoly& modulus = TowerLevel::get(k).modulus();
        for (std::size_t i = 0; i < N; ++i) {
            // Root angles (2i+1)/2^(k+1) in increasing order.
            const FieldElement root = two_cos(Dyadic(std::int64_t(2 * i + 1), k + 1));
            if (!eval_poly(modulus, root).is_zero())
                throw std::logic_error("galois: image is not a root of the minimal polynomial");
            g.elems_.push_back(Automorphism{k, int(i), root});
        }
        if (!(g.elems_[0].image == FieldElement::theta(k)))
            throw std::logic_error("galois: sigma_0 is not the identity");
        g.table_.assign(N, std::vector<int>(N, -1));
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                const FieldElement comp = apply_automorphism(g.elems_[i], g.elems_[j].image);
                g.table_[i][j] = g.find_root_index(comp);
            }
        g.check_group_axioms();
        return g;
    }

    int level() const { return level_; }
    std::size_t order() const { return elems_.size(); }
    const std::vector<Automorphism>& elements() const { return elems_; }
    const Automorphism& sigma(std::size_t i) const { return elems_.at(i); }
    /// Cayley table: entry (i, j) is the index of sigma_i ∘ sigma_j
    /// (apply sigma_j first).  The group is abelian, so the order of
    /// composition does not affect the table.
    const std::vector<std::vector<int>>& cayley_table() const { return table_; }
    int compose(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }

    /// Multiplicative order of sigma_i.
    std::size_t element_order(std::size_t i) const {
        std::size_t ord = 1;
        int x = int(i);
        while (x != 0) {
            x = table_[std::size_t(x)][i];
            ++ord;
        }
        return ord;
    }

private:
    int find_root_index(const FieldElement& e) const {
        for (std::size_t t = 0; t < elems_.size(); ++t)
            if (elems_[t].image == e) return int(t);
        throw std::logic_error("galois: composition image is not a root");
    }

    void check_group_axioms() const {
        const std::size_t N = elems_.size();
        for (std::size_t i = 0; i < N; ++i) {
            if (table_[i][0] != int(i) || table_[0][i] != int(i))
                throw std::logic_error("galois: sigma_0 fails as identity");
            std::vector<bool> seen(N, false);
            for (std::size_t j = 0; j < N; ++j) seen[std::size_t(table_[i][j])] = true;
            if (std::count(seen.begin(), seen.end(), true) != int(N))
                throw std::logic_error("galois: Cayley row is not a permutation");
        }
    }

    int level_ = 0;
    std::vector<Automorphism> elems_;
    std::vector<std::vector<int>> table_;
};

/// The chain of subgroups of the cyclic group of order 2^k, one per order
/// 2^j, descending: full group ⊃ ... ⊃ {sigma_0}.  Subgroups are sorted
/// index lists; the subgroup of order d collects exactly the elements whose
/// order divides d (unique in a cyclic group).
inline std::vector<std::vector<int>> subgroup_chain(const GaloisGroup& g) {
    const std::size_t N = g.order();
    std::vector<std::size_t> orders(N);
    for (std::size_t i = 0; i < N; ++i) orders[i] = g.element_order(i);
    std::vector<std::vector<int>> chain;
    for (std::size_t d = N; d >= 1; d /= 2) {
        std::vector<int> sub;
        for (std::size_t i = 0; i < N; ++i)
            if (d % orders[i] == 0) sub.push_back(int(i));
        if (sub.size() != d) throw std::logic_error("galois: subgroup of order " +
                                                    std::to_string(d) + " has wrong size");
        chain.push_back(std::move(sub));
        if (d == 1) break;
    }
    return chain;
}

/// Exact generator of the fixed field of a subgroup h (given as sorted
/// indices, |h| = 2^j): D_{|h|}(theta) = 2cos(pi/2^(k+1-j)), i.e. the
/// canonical generator of the tower level k-j embedded at level k.  Checked:
/// fixed by every element of h, and moved by some element outside h (when h
/// is proper).  For h = full group the generator is rational (level-0 value 0).
inline FieldElement fixed_field_generator(const GaloisGroup& g, const std::vector<int>& h) {
    const std::size_t N = g.order();
    if (h.empty() || (h.size() & (h.size() - 1)) != 0 || h.size() > N)
        throw std::domain_error("galois: subgroup size must be a power of two within the group");
    std::vector<Rational> tc(N, Rational(0));
    detail::add_dilated_term(tc, (unsigned long long)h.size(), Rational(1));
    const FieldElement gen = FieldElement::from_cheb_coeffs(g.level(), std::move(tc));
    std::vector<bool> in_h(N, false);
    for (int i : h) {
        in_h.at(std::size_t(i)) = true;
        if (!(apply_automorphism(g.sigma(std::size_t(i)), gen) == gen))
            throw std::logic_error("galois: generator is not fixed by the subgroup");
    }
    if (h.size() < N) {
        bool moved = false;
        for (std::size_t i = 0; i < N && !moved; ++i)
            if (!in_h[i]) moved = !(apply_automorphism(g.sigma(i), gen) == gen);
        if (!moved)
            throw std::logic_error("galois: generator is fixed by elements outside the subgroup");
    }
    return gen;
}

} // namespace algdct
