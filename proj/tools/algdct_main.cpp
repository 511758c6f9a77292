// Command-line front end: plan, count, verify, apply, factor, galois, emit.
//
// Exit codes: 0 success (and verification passed), 2 verification mismatch,
// 1 usage or runtime error.

#include "algdct/algdct.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace algdct;

TransformKind transform_from_name(const std::string& name) {
    for (TransformKind k : {TransformKind::dct4_poly, TransformKind::dct4,
                            TransformKind::dct2_poly, TransformKind::dct2})
        if (name == transform_kind_name(k)) return k;
    throw CLI::ValidationError("transform must be one of dct4, dct4_poly, dct2, dct2_poly");
}

// Shared plan source for verify/apply/emit: either a JSON file written by
// `plan --json`, or a (transform, size, skew) triple.
struct PlanArgs {
    std::string transform;
    std::size_t size = 0;
    std::string skew;
    std::string plan_file;

    void attach(CLI::App* cmd, bool with_plan_file = true) {
        cmd->add_option("transform", transform,
                        "transform kind: dct4, dct4_poly, dct2, dct2_poly");
        cmd->add_option("size", size, "transform size (power of two)");
        cmd->add_option("--skew", skew, "skew for dct4_poly, a dyadic in (0,1), e.g. 3/8");
        if (with_plan_file)
            cmd->add_option("--plan", plan_file, "load the plan from a JSON file instead");
    }

    TransformPlan build() const {
        if (!plan_file.empty()) {
            std::ifstream in(plan_file);
            if (!in) throw std::runtime_error("cannot open plan file " + plan_file);
            json j = json::parse(in);
            return plan_from_json(j);
        }
        if (transform.empty() || size == 0)
            throw CLI::ValidationError("either --plan FILE or transform and size are required");
        const TransformKind kind = transform_from_name(transform);
        if (!skew.empty() && kind != TransformKind::dct4_poly)
            throw CLI::ValidationError("--skew applies only to dct4_poly");
        switch (kind) {
            case TransformKind::dct4_poly:
                return plan_dct4_poly(size,
                                      skew.empty() ? Dyadic(1, 1) : Dyadic::parse(skew));
            case TransformKind::dct4:
                return plan_dct4(size);
            case TransformKind::dct2_poly:
                return plan_dct2_poly(size);
            case TransformKind::dct2:
                return plan_dct2(size);
        }
        throw std::logic_error("unreachable");
    }
};

std::string node_label(const TransformPlan& plan) {
    std::ostringstream os;
    os << transform_kind_name(plan.transform) << " n=" << plan.size;
    if (plan.skew) os << " skew=" << plan.skew->str();
    for (const Stage& st : plan.stages)
        if (st.kind == StageKind::add_scale_block)
            os << "  a = " << st.scalar.exact_string();
    return os.str();
}

void print_recursion(const TransformPlan& plan, const std::string& prefix, bool last,
                     bool root, int depth_left, std::ostream& os) {
    os << prefix;
    if (!root) os << (last ? "`- " : "|- ");
    os << node_label(plan) << "\n";
    if (depth_left == 0) return;
    const std::string child_prefix = root ? prefix : prefix + (last ? "   " : "|  ");
    for (const Stage& st : plan.stages)
        if (st.kind == StageKind::block_split)
            for (std::size_t c = 0; c < st.children.size(); ++c)
                print_recursion(st.children[c], child_prefix, c + 1 == st.children.size(),
                                false, depth_left - 1, os);
}

void print_stage_list(const TransformPlan& plan, std::ostream& os) {
    for (std::size_t i = 0; i < plan.stages.size(); ++i) {
        const Stage& st = plan.stages[i];
        os << "  " << (i + 1) << ". " << stage_kind_name(st.kind);
        switch (st.kind) {
            case StageKind::add_scale_block:
                os << "  m=" << st.half << "  a = " << st.scalar.exact_string() << " ~ "
                   << st.scalar.to_double();
                break;
            case StageKind::butterfly_pair:
            case StageKind::dct2_merge:
                os << "  m=" << st.half;
                break;
            case StageKind::block_split: {
                os << "  [";
                for (std::size_t c = 0; c < st.children.size(); ++c)
                    os << (c ? " | " : "") << st.children[c].size;
                os << "]";
                break;
            }
            case StageKind::permutation: {
                os << "  (";
                for (std::size_t c = 0; c < st.perm.size(); ++c)
                    os << (c ? "," : "") << st.perm[c];
                os << ")";
                break;
            }
            case StageKind::diagonal:
                os << "  " << st.entries.size() << " entries";
                break;
            case StageKind::identity:
                break;
        }
        os << "\n";
    }
}

std::string field_label(int level) {
    return level == 0 ? std::string("Q") : "Q(" + theta_surd(level) + ")";
}

std::string factor_string(std::size_t m, const Dyadic& skew) {
    const std::string base = m >= 2 ? "D_" + std::to_string(m) : std::string("x");
    const std::string surd = surd_two_cos(skew);
    if (surd == "0") return base;
    if (surd[0] == '-') return "(" + base + " + " + surd.substr(1) + ")";
    return "(" + base + " - " + surd + ")";
}

int run_plan(const PlanArgs& args, const std::string& json_out, int tree_depth) {
    const TransformPlan plan = args.build();
    if (!json_out.empty()) {
        const std::string text = plan_to_json(plan).dump(2) + "\n";
        if (json_out == "-") {
            std::cout << text;
        } else {
            std::ofstream out(json_out);
            if (!out) throw std::runtime_error("cannot write " + json_out);
            out << text;
        }
        return 0;
    }
    const OpCount ops = count_ops(plan);
    std::cout << "transform: " << transform_kind_name(plan.transform) << "\n";
    std::cout << "size: " << plan.size << "\n";
    if (plan.skew) std::cout << "skew: " << plan.skew->str() << "\n";
    std::cout << "operations: " << ops.mults << " multiplications, " << ops.adds
              << " additions\n";
    std::cout << "stages:\n";
    print_stage_list(plan, std::cout);
    std::cout << "recursion:\n";
    print_recursion(plan, "  ", true, true, tree_depth, std::cout);
    return 0;
}

int run_count(const PlanArgs& args) {
    const TransformPlan plan = args.build();
    const OpCount ops = count_ops(plan);
    const OpCount want = expected_ops(plan.transform, plan.size);
    std::cout << transform_kind_name(plan.transform) << " n=" << plan.size;
    if (plan.skew) std::cout << " skew=" << plan.skew->str();
    std::cout << ": " << ops.mults << " multiplications, " << ops.adds << " additions\n";
    std::cout << "closed form: " << want.mults << " multiplications, " << want.adds
              << " additions (" << (ops == want ? "match" : "MISMATCH") << ")\n";
    return ops == want ? 0 : 2;
}

int run_verify(const PlanArgs& args, bool exact, double tol) {
    const TransformPlan plan = args.build();
    VerifyReport rep = exact ? verify_exact(plan) : verify_float(plan, tol);
    std::cout << transform_kind_name(plan.transform) << " n=" << plan.size;
    if (plan.skew) std::cout << " skew=" << plan.skew->str();
    std::cout << ": " << rep.summary() << "\n";
    return rep.pass ? 0 : 2;
}

int run_apply(const PlanArgs& args, const std::string& input_csv, int unit, bool exact) {
    const TransformPlan plan = args.build();
    std::vector<Rational> input;
    if (!input_csv.empty()) {
        std::stringstream ss(input_csv);
        std::string item;
        while (std::getline(ss, item, ',')) input.push_back(parse_rational(item));
        if (input.size() != plan.size)
            throw std::runtime_error("input has " + std::to_string(input.size()) +
                                     " entries, plan needs " + std::to_string(plan.size));
    } else if (unit >= 0) {
        if (std::size_t(unit) >= plan.size)
            throw std::runtime_error("unit index out of range");
        input.assign(plan.size, Rational(0));
        input[std::size_t(unit)] = 1;
    } else {
        throw CLI::ValidationError("one of --input or --unit is required");
    }
    if (exact) {
        const std::vector<FieldElement> y = algdct::apply(plan, input);
        for (std::size_t i = 0; i < y.size(); ++i)
            std::cout << "y" << i << " = " << power_coeff_string(y[i]) << "  level "
                      << y[i].level() << "  ~ " << y[i].real_value() << "\n";
    } else {
        std::vector<double> x;
        x.reserve(input.size());
        for (const Rational& r : input) x.push_back(to_double(r));
        const std::vector<double> y = FloatPlan(plan).apply(x);
        char buf[32];
        for (std::size_t i = 0; i < y.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", y[i]);
            std::cout << "y" << i << " = " << buf << "\n";
        }
    }
    return 0;
}

int run_factor(int k, const std::string& skew, bool check) {
    if (k < 1 || k > limits::max_tower_level)
        throw CLI::ValidationError("k must be in [1, " +
                                   std::to_string(limits::max_tower_level) + "]");
    const Dyadic r = skew.empty() ? Dyadic(1, 1) : Dyadic::parse(skew);
    if (r.is_endpoint()) throw CLI::ValidationError("skew must lie strictly in (0,1)");
    const std::size_t n = std::size_t(1) << k;
    std::cout << "factorization of p(x) = D_" << n << "(x) - 2cos(" << r.str()
              << " pi) down the tower:\n\n";
    std::vector<Dyadic> skews{r};
    for (int d = 0; d <= k; ++d) {
        const std::size_t m = n >> d;
        int level = 0;
        for (const Dyadic& s : skews) level = std::max(level, two_cos(s).level());
        std::ostringstream row;
        for (std::size_t i = 0; i < skews.size(); ++i)
            row << (i ? " " : "") << factor_string(m, skews[i]);
        std::cout << "  depth " << d << "  over " << field_label(level) << ":\n";
        std::cout << "    " << row.str() << "\n";
        if (d == k) break;
        std::vector<Dyadic> next;
        next.reserve(skews.size() * 2);
        for (const Dyadic& s : skews) {
            next.push_back(s.half());
            next.push_back(s.one_minus_half());
        }
        skews = std::move(next);
    }
    if (check) {
        // Exact check of every split in the tree: parent = minus * plus.
        std::size_t checked = 0;
        std::vector<std::pair<int, Dyadic>> todo{{k, r}};
        while (!todo.empty()) {
            const auto [kk, s] = todo.back();
            todo.pop_back();
            if (kk < 1) continue;
            const FactorStep fs = factor_step(kk, s);
            if (!(fs.minus_factor * fs.plus_factor == skew_poly(std::size_t(1) << kk, s))) {
                std::cout << "\nsplit identity FAILED at k=" << kk << " skew=" << s.str()
                          << "\n";
                return 2;
            }
            ++checked;
            todo.emplace_back(kk - 1, fs.child_skew_minus);
            todo.emplace_back(kk - 1, fs.child_skew_plus);
        }
        std::cout << "\nall " << checked << " split identities verified exactly\n";
    }
    return 0;
}

int run_galois(int k) {
    if (k < 0 || k > limits::max_galois_level)
        throw CLI::ValidationError("k must be in [0, " +
                                   std::to_string(limits::max_galois_level) + "]");
    const GaloisGroup g = GaloisGroup::build(k);
    const std::size_t N = g.order();
    std::cout << "Galois group of Q(theta)/Q,  theta = 2cos(pi/" << (std::size_t(2) << k)
              << ") = " << theta_surd(k) << ",  degree " << N << "\n";
    std::cout << "order " << N << ", cyclic\n\n";
    std::cout << "automorphisms (s_i : theta -> 2cos((2i+1)pi/" << (std::size_t(2) << k)
              << ")):\n";
    for (std::size_t i = 0; i < N; ++i) {
        const Automorphism& a = g.sigma(i);
        std::cout << "  s" << i << ": theta -> " << power_coeff_string(a.image) << " = "
                  << surd_two_cos(Dyadic(std::int64_t(2 * i + 1), k + 1)) << "\n";
    }
    if (N <= 16) {
        std::cout << "\nCayley table (entry = index of s_row o s_col):\n     ";
        for (std::size_t j = 0; j < N; ++j) std::printf("%3zu", j);
        std::cout << "\n";
        for (std::size_t i = 0; i < N; ++i) {
            std::printf("  %2zu:", i);
            for (std::size_t j = 0; j < N; ++j) std::printf("%3d", g.compose(i, j));
            std::cout << "\n";
        }
    } else {
        std::cout << "\nCayley table suppressed (order " << N << ")\n";
    }
    std::cout << "\nsubgroup chain and fixed fields:\n";
    const auto chain = subgroup_chain(g);
    for (std::size_t c = 0; c < chain.size(); ++c) {
        const auto& sub = chain[c];
        const FieldElement gen = fixed_field_generator(g, sub);
        std::ostringstream name;
        name << "{";
        for (std::size_t i = 0; i < sub.size(); ++i) {
            if (i) name << ",";
            if (sub.size() > 8 && i == 3) {
                name << "...";
                break;
            }
            name << "s" << sub[i];
        }
        name << "}";
        // chain[c] has order 2^(k-c) and fixes the degree-2^c level Q(theta_c).
        std::cout << "  " << name.str() << "  fixes  " << field_label(int(c))
                  << "  generator " << power_coeff_string(gen) << " = "
                  << (gen.is_rational() ? rational_to_short_string(gen.rational_value())
                                        : theta_surd(int(c)))
                  << "\n";
    }
    return 0;
}

int run_emit(const PlanArgs& args, const std::string& format, const std::string& out_file) {
    const TransformPlan plan = args.build();
    std::string text;
    if (format == "kernel")
        text = emit_kernel(plan);
    else if (format == "graph")
        text = emit_graph(plan);
    else if (format == "json")
        text = plan_to_json(plan).dump(2) + "\n";
    else
        throw CLI::ValidationError("--format must be kernel, graph, or json");
    if (out_file.empty() || out_file == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_file);
        if (!out) throw std::runtime_error("cannot write " + out_file);
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact recursive DCT factorization toolkit"};
    app.require_subcommand(1);

    PlanArgs plan_args, count_args, verify_args, apply_args, emit_args;
    std::string json_out;
    int tree_depth = -1;
    bool verify_exact_mode = false;
    double verify_tol = 1e-10;
    std::string apply_input;
    int apply_unit = -1;
    bool apply_exact = false;
    int factor_k = 0;
    std::string factor_skew;
    bool factor_check = false;
    int galois_k = 0;
    std::string emit_format = "kernel";
    std::string emit_out;

    CLI::App* c_plan = app.add_subcommand("plan", "derive a plan and print or save it");
    plan_args.attach(c_plan);
    c_plan->add_option("--json", json_out, "write the plan as JSON to a file ('-' = stdout)");
    c_plan->add_option("--depth", tree_depth, "limit the recursion display depth");

    CLI::App* c_count = app.add_subcommand("count", "operation counts vs the closed form");
    count_args.attach(c_count);

    CLI::App* c_verify = app.add_subcommand("verify", "check a plan against the reference");
    verify_args.attach(c_verify);
    c_verify->add_flag("--exact", verify_exact_mode, "exact field comparison (small sizes)");
    c_verify->add_option("--tol", verify_tol, "float tolerance (default 1e-10)");

    CLI::App* c_apply = app.add_subcommand("apply", "apply a plan to a vector");
    apply_args.attach(c_apply);
    c_apply->add_option("--input", apply_input, "comma-separated rational inputs");
    c_apply->add_option("--unit", apply_unit, "apply to the j-th unit vector");
    c_apply->add_flag("--exact", apply_exact, "exact field arithmetic output");

    CLI::App* c_factor = app.add_subcommand("factor", "tower factorization of D_n - 2cos(r pi)");
    c_factor->add_option("k", factor_k, "tower level: factors D_{2^k}")->required();
    c_factor->add_option("--skew", factor_skew, "dyadic skew r (default 1/2)");
    c_factor->add_flag("--check", factor_check, "verify every split identity exactly");

    CLI::App* c_galois = app.add_subcommand("galois", "Galois group of a tower level");
    c_galois->add_option("k", galois_k, "tower level")->required();

    CLI::App* c_emit = app.add_subcommand("emit", "emit kernel text, DOT graph, or JSON");
    emit_args.attach(c_emit);
    c_emit->add_option("--format", emit_format, "kernel | graph | json");
    c_emit->add_option("-o,--output", emit_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (c_plan->parsed()) return run_plan(plan_args, json_out, tree_depth);
        if (c_count->parsed()) return run_count(count_args);
        if (c_verify->parsed()) return run_verify(verify_args, verify_exact_mode, verify_tol);
        if (c_apply->parsed()) return run_apply(apply_args, apply_input, apply_unit, apply_exact);
        if (c_factor->parsed()) return run_factor(factor_k, factor_skew, factor_check);
        if (c_galois->parsed()) return run_galois(galois_k);
        if (c_emit->parsed()) return run_emit(emit_args, emit_format, emit_out);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
