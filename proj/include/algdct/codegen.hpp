#pragma once

#include "algdct/executor.hpp"
#include "algdct/plan.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace algdct {

// ---------------------------------------------------------------------------
// Straight-line IR
//
// A plan unrolled to single operations on scalar values.  Node ids 0..n-1 are
// the inputs; every stage appends nodes and rewires the slot map; the final
// slot map gives the output ids.  Kernel text and dataflow graphs are both
// printed from this one structure.
// ---------------------------------------------------------------------------

struct IRProgram {
    enum class Op { input, add, sub, mul, neg, zero };

    struct Node {
        Op op = Op::input;
        int a = -1;  // left operand id
        int b = -1;  // right operand id (add/sub)
        int c = -1;  // constant index (mul)
    };

    std::size_t n = 0;
    std::string label;                  // e.g. "dct4_poly n=8 skew=1/2"
    std::vector<PlanScalar> constants;  // deduplicated, discovery order
    std::vector<Node> nodes;            // ids 0..n-1 are inputs
    std::vector<int> outputs;           // node id per output slot

    std::size_t mult_count() const {
        std::size_t c = 0;
        for (const Node& nd : nodes)
            if (nd.op == Op::mul) ++c;
        return c;
    }
    std::size_t add_count() const {
        std::size_t c = 0;
        for (const Node& nd : nodes)
            if (nd.op == Op::add || nd.op == Op::sub) ++c;
        return c;
    }
};

namespace detail {

class IRBuilder {
public:
    explicit IRBuilder(const TransformPlan& plan) {
        ir_.n = plan.size;
        std::ostringstream label;
        label << transform_kind_name(plan.transform) << " n=" << plan.size;
        if (plan.skew) label << " skew=" << plan.skew->str();
        ir_.label = label.str();
        ir_.nodes.resize(plan.size);
        std::vector<int> slots(plan.size);
        for (std::size_t i = 0; i < plan.size; ++i) slots[i] = int(i);
        walk(plan, slots, 0);
        ir_.outputs = std::move(slots);
    }

    IRProgram take() { return std::move(ir_); }

private:
    int constant_index(const PlanScalar& s) {
        for (std::size_t i = 0; i < ir_.constants.size(); ++i)
            if (ir_.constants[i] == s) return int(i);
        ir_.constants.push_back(s);
        return int(ir_.constants.size() - 1);
    }

    int emit(IRProgram::Op op, int a = -1, int b = -1, int c = -1) {
        ir_.nodes.push_back(IRProgram::Node{op, a, b, c});
        return int(ir_.nodes.size() - 1);
    }

    int emit_scaled(const PlanScalar& s, int src) {
        if (s.is_one()) return src;
        if (s.is_zero()) return emit(IRProgram::Op::zero);
        if (s.is_minus_one()) return emit(IRProgram::Op::neg, src);
        return emit(IRProgram::Op::mul, src, -1, constant_index(s));
    }

    void walk(const TransformPlan& plan, std::vector<int>& slots, std::size_t off) {
        for (const Stage& st : plan.stages) {
            switch (st.kind) {
                case StageKind::identity:
                    break;
                case StageKind::add_scale_block: {
                    const std::size_t m = st.half;
                    for (std::size_t i = 0; i < m; ++i)
                        slots[off + i] = emit(IRProgram::Op::sub, slots[off + i],
                                              slots[off + 2 * m - 1 - i]);
                    for (std::size_t i = 0; i < m; ++i)
                        slots[off + m + i] = emit_scaled(st.scalar, slots[off + m + i]);
                    break;
                }
                case StageKind::butterfly_pair: {
                    const std::size_t m = st.half;
                    for (std::size_t i = 0; i < m; ++i) {
                        const int s = emit(IRProgram::Op::add, slots[off + i], slots[off + m + i]);
                        const int d = emit(IRProgram::Op::sub, slots[off + i], slots[off + m + i]);
                        slots[off + i] = s;
                        slots[off + m + i] = d;
                    }
                    break;
                }
                case StageKind::dct2_merge: {
                    const std::size_t m = st.half;
                    // Snapshot the reversed upper-half ids: the writes to the
                    // upper half would otherwise clobber later reads.
                    std::vector<int> rev(m);
                    for (std::size_t i = 0; i < m; ++i) rev[i] = slots[off + 2 * m - 1 - i];
                    for (std::size_t i = 0; i < m; ++i) {
                        const int s = emit(IRProgram::Op::add, slots[off + i], rev[i]);
                        const int d = emit(IRProgram::Op::sub, slots[off + i], rev[i]);
                        slots[off + i] = s;
                        slots[off + m + i] = d;
                    }
                    break;
                }
                case StageKind::block_split: {
                    std::size_t child_off = off;
                    for (const TransformPlan& child : st.children) {
                        walk(child, slots, child_off);
                        child_off += child.size;
                    }
                    break;
                }
                case StageKind::permutation: {
                    std::vector<int> tmp(st.perm.size());
                    for (std::size_t i = 0; i < st.perm.size(); ++i)
                        tmp[i] = slots[off + st.perm[i]];
                    for (std::size_t i = 0; i < st.perm.size(); ++i) slots[off + i] = tmp[i];
                    break;
                }
                case StageKind::diagonal: {
                    for (std::size_t i = 0; i < st.entries.size(); ++i)
                        slots[off + i] = emit_scaled(st.entries[i], slots[off + i]);
                    break;
                }
            }
        }
    }

    IRProgram ir_;
};

inline std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace detail

inline IRProgram build_ir(const TransformPlan& plan) {
    return detail::IRBuilder(plan).take();
}

// ---------------------------------------------------------------------------
// Kernel text
// ---------------------------------------------------------------------------

/// Print the plan as a straight-line scalar kernel: constant declarations
/// (with their exact closed forms as comments), one statement per arithmetic
/// operation, inputs x0.., temporaries t0.., outputs y0...  Copies and
/// negations cost nothing; the number of '*' statements equals
/// count_ops(plan).mults and the '+/-' statements equal .adds.
inline std::string emit_kernel(const TransformPlan& plan) {
    const IRProgram ir = build_ir(plan);
    const OpCount ops = count_ops(plan);
    std::ostringstream os;
    os << "// " << ir.label << "\n";
    os << "// " << ops.mults << " multiplications, " << ops.adds << " additions\n";
    os << "// inputs x0..x" << (ir.n - 1) << ", outputs y0..y" << (ir.n - 1) << "\n";
    for (std::size_t i = 0; i < ir.constants.size(); ++i)
        os << "const double c" << i << " = "
           << detail::format_double(ir.constants[i].to_double()) << ";  // "
           << ir.constants[i].exact_string() << "\n";

    // Mark nodes reachable from the outputs (defensive; stock plans produce
    // no dead nodes).
    std::vector<bool> live(ir.nodes.size(), false);
    {
        std::vector<int> stack(ir.outputs.begin(), ir.outputs.end());
        while (!stack.empty()) {
            const int id = stack.back();
            stack.pop_back();
            if (id < 0 || live[std::size_t(id)]) continue;
            live[std::size_t(id)] = true;
            stack.push_back(ir.nodes[std::size_t(id)].a);
            stack.push_back(ir.nodes[std::size_t(id)].b);
        }
    }

    // Name assignment: a non-input node that is the unique producer of one
    // output slot is named y<slot> at its defining statement; remaining nodes
    // get temporaries in definition order.
    std::vector<std::string> name(ir.nodes.size());
    std::vector<std::pair<std::size_t, int>> copies;  // (output slot, node id)
    {
        std::vector<bool> claimed(ir.nodes.size(), false);
        for (std::size_t o = 0; o < ir.outputs.size(); ++o) {
            const int id = ir.outputs[o];
            if (id >= int(ir.n) && !claimed[std::size_t(id)]) {
                claimed[std::size_t(id)] = true;
                name[std::size_t(id)] = "y" + std::to_string(o);
            } else {
                copies.emplace_back(o, id);
            }
        }
    }
    for (std::size_t i = 0; i < ir.n; ++i) name[i] = "x" + std::to_string(i);
    std::size_t temps = 0;
    for (std::size_t id = ir.n; id < ir.nodes.size(); ++id)
        if (live[id] && name[id].empty()) name[id] = "t" + std::to_string(temps++);

    for (std::size_t id = ir.n; id < ir.nodes.size(); ++id) {
        if (!live[id]) continue;
        const IRProgram::Node& nd = ir.nodes[id];
        os << name[id] << " = ";
        switch (nd.op) {
            case IRProgram::Op::add:
                os << name[std::size_t(nd.a)] << " + " << name[std::size_t(nd.b)];
                break;
            case IRProgram::Op::sub:
                os << name[std::size_t(nd.a)] << " - " << name[std::size_t(nd.b)];
                break;
            case IRProgram::Op::mul:
                os << "c" << nd.c << " * " << name[std::size_t(nd.a)];
                break;
            case IRProgram::Op::neg:
                os << "-" << name[std::size_t(nd.a)];
                break;
            case IRProgram::Op::zero:
                os << "0.0";
                break;
            case IRProgram::Op::input:
                throw std::logic_error("codegen: input node re-emitted");
        }
        os << ";\n";
    }
    for (const auto& [o, id] : copies)
        os << "y" << o << " = " << name[std::size_t(id)] << ";\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Dataflow graph (Graphviz DOT)
// ---------------------------------------------------------------------------

/// Print the plan's dataflow as a DOT digraph: inputs and outputs as boxes,
/// one node per arithmetic operation, multiplication edges labeled with
/// their constant.
inline std::string emit_graph(const TransformPlan& plan) {
    const IRProgram ir = build_ir(plan);
    std::ostringstream os;
    os << "digraph \"" << ir.label << "\" {\n";
    os << "  rankdir=LR;\n";
    os << "  node [fontname=\"Helvetica\"];\n";
    for (std::size_t i = 0; i < ir.constants.size(); ++i)
        os << "  // c" << i << " = " << detail::format_double(ir.constants[i].to_double())
           << " = " << ir.constants[i].exact_string() << "\n";
    for (std::size_t i = 0; i < ir.n; ++i)
        os << "  x" << i << " [shape=box];\n";
    for (std::size_t id = ir.n; id < ir.nodes.size(); ++id) {
        const IRProgram::Node& nd = ir.nodes[id];
        const char* lbl = nullptr;
        switch (nd.op) {
            case IRProgram::Op::add: lbl = "+"; break;
            case IRProgram::Op::sub: lbl = "\xe2\x88\x92"; break;  // minus sign
            case IRProgram::Op::mul: lbl = "\xc3\x97"; break;      // times sign
            case IRProgram::Op::neg: lbl = "neg"; break;
            case IRProgram::Op::zero: lbl = "0"; break;
            case IRProgram::Op::input: continue;
        }
        os << "  v" << id << " [label=\"" << lbl << "\"];\n";
    }
    const auto node_name = [&](int id) {
        return (id < int(ir.n) ? "x" : "v") + std::to_string(id);
    };
    for (std::size_t id = ir.n; id < ir.nodes.size(); ++id) {
        const IRProgram::Node& nd = ir.nodes[id];
        switch (nd.op) {
            case IRProgram::Op::add:
                os << "  " << node_name(nd.a) << " -> v" << id << ";\n";
                os << "  " << node_name(nd.b) << " -> v" << id << ";\n";
                break;
            case IRProgram::Op::sub:
                os << "  " << node_name(nd.a) << " -> v" << id << ";\n";
                os << "  " << node_name(nd.b) << " -> v" << id << " [label=\"-\"];\n";
                break;
            case IRProgram::Op::mul:
                os << "  " << node_name(nd.a) << " -> v" << id << " [label=\"c" << nd.c
                   << "\"];\n";
                break;
            case IRProgram::Op::neg:
                os << "  " << node_name(nd.a) << " -> v" << id << ";\n";
                break;
            default:
                break;
        }
    }
    for (std::size_t o = 0; o < ir.outputs.size(); ++o) {
        os << "  y" << o << " [shape=box];\n";
        os << "  " << node_name(ir.outputs[o]) << " -> y" << o << ";\n";
    }
    os << "}\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Kernel text interpreter
// ---------------------------------------------------------------------------

// Parses the text produced by emit_kernel back into an executable program.
// Used to check that the printed kernel is faithful to the plan it came from.
class KernelProgram {
public:
    static KernelProgram parse(const std::string& text) {
        KernelProgram prog;
        std::istringstream in(text);
        std::string line;
        std::map<std::string, int> env;  // variable name -> register index
        const auto reg_of = [&](const std::string& name, bool is_use) {
            auto it = env.find(name);
            if (it != env.end()) return it->second;
            // Inputs x<i> spring into existence on first use; any other name
            // must be assigned before it is read.
            if (is_use && name[0] != 'x')
                throw std::runtime_error("kernel: use of undefined name " + name);
            const int r = int(prog.register_count_++);
            env.emplace(name, r);
            return r;
        };
        while (std::getline(in, line)) {
            const std::string s = detail_strip(line);
            if (s.empty() || s.rfind("//", 0) == 0) continue;
            if (s.rfind("const double ", 0) == 0) {
                // const double cK = <value>;  // comment
                const std::string rest = s.substr(13);
                const std::size_t eq = rest.find('=');
                const std::size_t sc = rest.find(';');
                if (eq == std::string::npos || sc == std::string::npos || sc < eq)
                    throw std::runtime_error("kernel: malformed constant line: " + line);
                const std::string cname = detail_strip(rest.substr(0, eq));
                const std::string cval = detail_strip(rest.substr(eq + 1, sc - eq - 1));
                const std::size_t idx = parse_index(cname, 'c');
                if (idx != prog.constants_.size())
                    throw std::runtime_error("kernel: constants out of order at " + cname);
                prog.constants_.push_back(std::stod(cval));
                continue;
            }
            const std::size_t eq = s.find('=');
            const std::size_t sc = s.rfind(';');
            if (eq == std::string::npos || sc == std::string::npos || sc < eq)
                throw std::runtime_error("kernel: malformed statement: " + line);
            const std::string dst = detail_strip(s.substr(0, eq));
            const std::string rhs = detail_strip(s.substr(eq + 1, sc - eq - 1));
            Instr ins;
            // Operands never carry signs or embedded operators, so a top-level
            // scan for the operator character is unambiguous.
            std::size_t pos;
            if ((pos = rhs.find(" + ")) != std::string::npos) {
                ins.kind = Instr::Kind::add;
                ins.a = reg_of(detail_strip(rhs.substr(0, pos)), true);
                ins.b = reg_of(detail_strip(rhs.substr(pos + 3)), true);
            } else if ((pos = rhs.find(" - ")) != std::string::npos) {
                ins.kind = Instr::Kind::sub;
                ins.a = reg_of(detail_strip(rhs.substr(0, pos)), true);
                ins.b = reg_of(detail_strip(rhs.substr(pos + 3)), true);
            } else if ((pos = rhs.find(" * ")) != std::string::npos) {
                ins.kind = Instr::Kind::mul;
                const std::string cname = detail_strip(rhs.substr(0, pos));
                ins.c = int(parse_index(cname, 'c'));
                if (ins.c >= int(prog.constants_.size()))
                    throw std::runtime_error("kernel: unknown constant " + cname);
                ins.a = reg_of(detail_strip(rhs.substr(pos + 3)), true);
            } else if (!rhs.empty() && rhs[0] == '-') {
                ins.kind = Instr::Kind::neg;
                ins.a = reg_of(detail_strip(rhs.substr(1)), true);
            } else if (rhs == "0.0" || rhs == "0") {
                ins.kind = Instr::Kind::zero;
            } else {
                ins.kind = Instr::Kind::copy;
                ins.a = reg_of(rhs, true);
            }
            if (dst.size() >= 2 && dst[0] == 'x')
                throw std::runtime_error("kernel: assignment to input " + dst);
            ins.dst = reg_of(dst, false);
            if (dst[0] == 'y') {
                const std::size_t o = parse_index(dst, 'y');
                if (prog.outputs_.size() <= o) prog.outputs_.resize(o + 1, -1);
                prog.outputs_[o] = ins.dst;
            }
            prog.instrs_.push_back(ins);
            if (ins.kind == Instr::Kind::add || ins.kind == Instr::Kind::sub) ++prog.add_lines_;
            if (ins.kind == Instr::Kind::mul) ++prog.mult_lines_;
        }
        // Inputs: x0..x{max}; they may appear in any order in the text.
        std::size_t max_input = 0;
        bool any_input = false;
        for (const auto& kv : env)
            if (kv.first[0] == 'x') {
                any_input = true;
                max_input = std::max(max_input, parse_index(kv.first, 'x'));
            }
        if (any_input) {
            prog.inputs_.resize(max_input + 1, -1);
            for (const auto& kv : env)
                if (kv.first[0] == 'x') prog.inputs_[parse_index(kv.first, 'x')] = kv.second;
        }
        for (int r : prog.outputs_)
            if (r < 0) throw std::runtime_error("kernel: missing output definition");
        return prog;
    }

    std::size_t input_count() const { return inputs_.size(); }
    std::size_t output_count() const { return outputs_.size(); }
    std::size_t mult_lines() const { return mult_lines_; }
    std::size_t add_lines() const { return add_lines_; }

    std::vector<double> run(const std::vector<double>& x) const {
        if (x.size() != inputs_.size())
            throw std::domain_error("kernel: input length mismatch");
        std::vector<double> reg(register_count_, 0.0);
        for (std::size_t i = 0; i < inputs_.size(); ++i)
            if (inputs_[i] >= 0) reg[std::size_t(inputs_[i])] = x[i];
        for (const Instr& ins : instrs_) {
            switch (ins.kind) {
                case Instr::Kind::add:
                    reg[std::size_t(ins.dst)] = reg[std::size_t(ins.a)] + reg[std::size_t(ins.b)];
                    break;
                case Instr::Kind::sub:
                    reg[std::size_t(ins.dst)] = reg[std::size_t(ins.a)] - reg[std::size_t(ins.b)];
                    break;
                case Instr::Kind::mul:
                    reg[std::size_t(ins.dst)] =
                        constants_[std::size_t(ins.c)] * reg[std::size_t(ins.a)];
                    break;
                case Instr::Kind::neg:
                    reg[std::size_t(ins.dst)] = -reg[std::size_t(ins.a)];
                    break;
                case Instr::Kind::zero:
                    reg[std::size_t(ins.dst)] = 0.0;
                    break;
                case Instr::Kind::copy:
                    reg[std::size_t(ins.dst)] = reg[std::size_t(ins.a)];
                    break;
            }
        }
        std::vector<double> y(outputs_.size());
        for (std::size_t o = 0; o < outputs_.size(); ++o)
            y[o] = reg[std::size_t(outputs_[o])];
        return y;
    }

private:
    struct Instr {
        enum class Kind { add, sub, mul, neg, zero, copy };
        Kind kind = Kind::copy;
        int dst = -1, a = -1, b = -1, c = -1;
    };

    static std::string detail_strip(const std::string& s) {
        std::size_t b = 0, e = s.size();
        while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
        while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
        return s.substr(b, e - b);
    }

    static std::size_t parse_index(const std::string& name, char prefix) {
        if (name.size() < 2 || name[0] != prefix)
            throw std::runtime_error("kernel: expected name like " + std::string(1, prefix) +
                                     "<k>, got " + name);
        return std::stoul(name.substr(1));
    }

    std::vector<double> constants_;
    std::vector<Instr> instrs_;
    std::vector<int> inputs_;   // register of x<i>
    std::vector<int> outputs_;  // register of y<o>
    std::size_t register_count_ = 0;
    std::size_t mult_lines_ = 0;
    std::size_t add_lines_ = 0;
};

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

using json = nlohmann::ordered_json;

inline json field_to_json(const FieldElement& e) {
    json j;
    j["level"] = e.level();
    json coeffs = json::array();
    for (const Rational& c : e.power_coeffs()) coeffs.push_back(rational_to_string(c));
    j["coeffs"] = std::move(coeffs);
    j["approx"] = e.real_value();
    return j;
}

inline json scalar_to_json(const PlanScalar& s) {
    json j;
    j["angle"] = s.angle().str();
    j["scale"] = rational_to_string(s.scale());
    j["approx"] = s.to_double();
    j["exact"] = s.exact_string();
    if (s.level() <= limits::max_json_coeff_level) j["value"] = field_to_json(s.to_field());
    return j;
}

inline PlanScalar scalar_from_json(const json& j) {
    return PlanScalar(Dyadic::parse(j.at("angle").get<std::string>()),
                      parse_rational(j.at("scale").get<std::string>()));
}

inline json plan_to_json(const TransformPlan& plan) {
    json j;
    j["transform"] = transform_kind_name(plan.transform);
    j["size"] = plan.size;
    if (plan.skew) j["skew"] = plan.skew->str();
    json stages = json::array();
    for (const Stage& st : plan.stages) {
        json s;
        s["kind"] = stage_kind_name(st.kind);
        switch (st.kind) {
            case StageKind::identity:
                break;
            case StageKind::add_scale_block:
                s["half"] = st.half;
                s["scalar"] = scalar_to_json(st.scalar);
                break;
            case StageKind::butterfly_pair:
            case StageKind::dct2_merge:
                s["half"] = st.half;
                break;
            case StageKind::block_split: {
                json kids = json::array();
                for (const TransformPlan& child : st.children) kids.push_back(plan_to_json(child));
                s["children"] = std::move(kids);
                break;
            }
            case StageKind::permutation:
                s["perm"] = st.perm;
                break;
            case StageKind::diagonal: {
                json entries = json::array();
                for (const PlanScalar& d : st.entries) entries.push_back(scalar_to_json(d));
                s["entries"] = std::move(entries);
                break;
            }
        }
        stages.push_back(std::move(s));
    }
    j["stages"] = std::move(stages);
    return j;
}

inline TransformPlan plan_from_json(const json& j);

namespace detail {

inline StageKind stage_kind_from_name(const std::string& name) {
    for (StageKind k : {StageKind::identity, StageKind::add_scale_block,
                        StageKind::butterfly_pair, StageKind::dct2_merge, StageKind::block_split,
                        StageKind::permutation, StageKind::diagonal})
        if (name == stage_kind_name(k)) return k;
    throw std::runtime_error("json: unknown stage kind \"" + name + "\"");
}

inline TransformKind transform_kind_from_name(const std::string& name) {
    for (TransformKind k : {TransformKind::dct4_poly, TransformKind::dct4,
                            TransformKind::dct2_poly, TransformKind::dct2})
        if (name == transform_kind_name(k)) return k;
    throw std::runtime_error("json: unknown transform kind \"" + name + "\"");
}

} // namespace detail

inline TransformPlan plan_from_json(const json& j) {
    TransformPlan plan;
    plan.transform = detail::transform_kind_from_name(j.at("transform").get<std::string>());
    plan.size = j.at("size").get<std::size_t>();
    if (!detail::is_power_of_two(plan.size))
        throw std::runtime_error("json: plan size must be a power of two");
    if (j.contains("skew")) plan.skew = Dyadic::parse(j.at("skew").get<std::string>());
    for (const json& s : j.at("stages")) {
        Stage st;
        st.kind = detail::stage_kind_from_name(s.at("kind").get<std::string>());
        switch (st.kind) {
            case StageKind::identity:
                break;
            case StageKind::add_scale_block:
                st.half = s.at("half").get<std::size_t>();
                st.scalar = scalar_from_json(s.at("scalar"));
                break;
            case StageKind::butterfly_pair:
            case StageKind::dct2_merge:
                st.half = s.at("half").get<std::size_t>();
                break;
            case StageKind::block_split: {
                std::size_t total = 0;
                for (const json& kid : s.at("children")) {
                    st.children.push_back(plan_from_json(kid));
                    total += st.children.back().size;
                }
                if (total != plan.size)
                    throw std::runtime_error("json: block children sizes do not sum to plan size");
                break;
            }
            case StageKind::permutation: {
                st.perm = s.at("perm").get<std::vector<std::size_t>>();
                std::vector<bool> seen(st.perm.size(), false);
                for (std::size_t p : st.perm) {
                    if (p >= st.perm.size() || seen[p])
                        throw std::runtime_error("json: perm is not a permutation");
                    seen[p] = true;
                }
                break;
            }
            case StageKind::diagonal:
                for (const json& d : s.at("entries")) st.entries.push_back(scalar_from_json(d));
                break;
        }
        plan.stages.push_back(std::move(st));
    }
    return plan;
}

// Structural plan equality (used to check JSON round trips).
inline bool plans_equal(const TransformPlan& a, const TransformPlan& b) {
    if (a.transform != b.transform || a.size != b.size) return false;
    if (a.skew.has_value() != b.skew.has_value()) return false;
    if (a.skew && !(*a.skew == *b.skew)) return false;
    if (a.stages.size() != b.stages.size()) return false;
    for (std::size_t i = 0; i < a.stages.size(); ++i) {
        const Stage& x = a.stages[i];
        const Stage& y = b.stages[i];
        if (x.kind != y.kind || x.half != y.half || x.scalar != y.scalar || x.perm != y.perm)
            return false;
        if (x.entries != y.entries) return false;
        if (x.children.size() != y.children.size()) return false;
        for (std::size_t c = 0; c < x.children.size(); ++c)
            if (!plans_equal(x.children[c], y.children[c])) return false;
    }
    return true;
}

} // namespace algdct
