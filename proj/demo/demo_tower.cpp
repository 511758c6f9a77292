// Tour of the exact arithmetic layer: the tower Q(2cos(pi/2^(k+1))), its
// minimal polynomials, Chebyshev factorization steps, and Galois groups.

#include "algdct/algdct.hpp"

#include <iostream>

using namespace algdct;

int main() {
    std::cout << "=== minimal polynomials ===\n";
    for (int k = 0; k <= 3; ++k)
        std::cout << "level " << k << ": theta = " << theta_surd(k) << ",  modulus "
                  << poly_to_string(TowerLevel::get(k).modulus()) << "\n";

    std::cout << "\n=== arithmetic at level 2 (theta = 2cos(pi/8)) ===\n";
    const FieldElement theta = FieldElement::theta(2);
    const FieldElement s = theta * theta - FieldElement(2, Rational(2));
    std::cout << "theta^2 - 2      = " << power_coeff_string(s) << "  ~ " << s.real_value()
              << "  (this is sqrt(2))\n";
    std::cout << "(theta^2 - 2)^2  = " << power_coeff_string(s * s) << "\n";
    const FieldElement inv = theta.inverse();
    std::cout << "theta^{-1}       = " << power_coeff_string(inv) << "\n";
    std::cout << "theta * theta^{-1} = " << power_coeff_string(theta * inv) << "\n";

    std::cout << "\n=== dyadic cosines ===\n";
    for (const Dyadic& t : {Dyadic(1, 2), Dyadic(1, 3), Dyadic(3, 3), Dyadic(5, 4)}) {
        const FieldElement c = two_cos(t);
        std::cout << "2cos(" << t.str() << " pi) lives at level " << c.level() << ": "
                  << surd_two_cos(t) << " ~ " << c.real_value() << "\n";
    }

    std::cout << "\n=== one factorization step ===\n";
    const FactorStep fs = factor_step(2, Dyadic(1, 1));
    std::cout << "D_4  =  (" << "D_2 - " << fs.c_prime.real_value() << ") (D_2 + "
              << fs.c_prime.real_value() << ")   with c' = " << surd_two_cos(Dyadic(1, 2))
              << "\n";
    std::cout << "child skews: " << fs.child_skew_minus.str() << " and "
              << fs.child_skew_plus.str() << "\n";
    std::cout << "product check: "
              << (fs.minus_factor * fs.plus_factor == skew_poly(4, Dyadic(1, 1)) ? "exact"
                                                                                 : "BROKEN")
              << "\n";

    std::cout << "\n=== Galois group at level 2 ===\n";
    const GaloisGroup g = GaloisGroup::build(2);
    std::cout << "order " << g.order() << "; Cayley table:\n";
    for (std::size_t i = 0; i < g.order(); ++i) {
        for (std::size_t j = 0; j < g.order(); ++j) std::cout << " " << g.compose(i, j);
        std::cout << "\n";
    }
    const auto chain = subgroup_chain(g);
    for (std::size_t c = 0; c < chain.size(); ++c) {
        const FieldElement gen = fixed_field_generator(g, chain[c]);
        std::cout << "subgroup of order " << chain[c].size() << " fixes "
                  << (c == 0 ? std::string("Q") : "Q(" + theta_surd(int(c)) + ")")
                  << ", generator " << power_coeff_string(gen) << " ~ " << gen.real_value()
                  << "\n";
    }
    return 0;
}
