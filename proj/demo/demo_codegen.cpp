// Tour of the planning/execution layer: derive a fast DCT-4, count its
// operations, verify it, and print the generated kernel.

#include "algdct/algdct.hpp"

#include <iostream>

using namespace algdct;

int main() {
    const std::size_t n = 8;
    const TransformPlan plan = plan_dct4(n);

    const OpCount ops = count_ops(plan);
    const OpCount want = expected_ops(TransformKind::dct4, n);
    std::cout << "dct4 n=" << n << ": " << ops.mults << " mults, " << ops.adds
              << " adds (closed form " << want.mults << ", " << want.adds << ")\n\n";

    std::cout << "float verification: " << verify_float(plan, 1e-10).summary() << "\n";
    std::cout << "exact verification: " << verify_exact(plan).summary() << "\n\n";

    std::cout << "=== generated kernel ===\n" << emit_kernel(plan) << "\n";

    // Run the kernel text through the interpreter and compare with the
    // compiled float plan.
    const KernelProgram prog = KernelProgram::parse(emit_kernel(plan));
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = double(i + 1) / double(n);
    const std::vector<double> a = prog.run(x);
    const std::vector<double> b = FloatPlan(plan).apply(x);
    double maxdiff = 0;
    for (std::size_t i = 0; i < n; ++i) maxdiff = std::max(maxdiff, std::abs(a[i] - b[i]));
    std::cout << "kernel-vs-plan max difference: " << maxdiff << "\n";

    // Exact application: the first output column of the size-4 transform.
    std::cout << "\nexact first column of dct4 n=4:\n";
    for (const FieldElement& y : algdct::apply(plan_dct4(4), std::vector<Rational>{1, 0, 0, 0}))
        std::cout << "  " << power_coeff_string(y) << "  ~ " << y.real_value() << "\n";
    return 0;
}
