#include "ordcalc/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordcalc/assign.hpp"
#include "ordcalc/base_change.hpp"
#include "ordcalc/fundamental.hpp"
#include "ordcalc/gap.hpp"
#include "ordcalc/goodstein.hpp"
#include "ordcalc/hardy.hpp"
#include "ordcalc/normal_form.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

using ordered_json = nlohmann::ordered_json;

namespace {

const std::atomic<bool>* g_stop_flag = nullptr;

Nat nat_arg(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("expected a decimal natural number, got \"" + s + "\"", 0);
    return Nat(s);
}

bool is_all_digits(const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
}

// Records-mode rendering of a natural: decimal string up to the trace
// threshold, {digits, prefix} beyond it.
ordered_json nat_json(const Nat& v) {
    std::string s = v.str();
    if (s.size() <= trace_digit_threshold()) return s;
    ordered_json big;
    big["digits"] = s.size();
    big["prefix"] = s.substr(0, 32);
    return big;
}

ordered_json knf_json(const KNF& nf) {
    ordered_json j;
    if (nf.literal) {
        j["literal"] = nat_json(*nf.literal);
    } else {
        j["alpha"] = print_term(nf.alpha);
        j["p"] = nat_json(nf.p);
        j["q"] = nat_json(nf.q);
    }
    return j;
}

std::string set_text(const std::vector<TermPtr>& terms) {
    std::string out = "{";
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) out += ", ";
        out += print_term(terms[i]);
    }
    return out + "}";
}

}  // namespace

void install_stop_flag(const std::atomic<bool>* flag) { g_stop_flag = flag; }

const std::vector<CommandInfo>& command_table() {
    static const std::vector<CommandInfo> table = {
        {"parse", {"parse"}},
        {"print", {"print"}},
        {"cmp", {"compare"}},
        {"add", {"add"}},
        {"mul", {"mul_nat"}},
        {"norm", {"norm", "max_coefficient"}},
        {"ot-check", {"is_ot"}},
        {"ot0-check", {"is_ot0"}},
        {"g0", {"g0"}},
        {"g1", {"g1"}},
        {"tp", {"tp"}},
        {"fs", {"fs_step"}},
        {"descend", {"iter_descent"}},
        {"step-le", {"step_le"}},
        {"bachmann", {"check_bachmann"}},
        {"fgh", {"fgh_eval"}},
        {"hardy", {"hardy"}},
        {"ladder", {"ladder"}},
        {"knf", {"knf_decompose", "knf_value"}},
        {"knf-oracle", {"knf_oracle"}},
        {"bc-nat", {"bc_nat"}},
        {"bc-ord", {"bc_ord"}},
        {"classify-gap",
         {"classify_gap", "substitute", "truncate", "is_psi0_nesting_free", "bc_context",
          "assign_context"}},
        {"assign", {"assign_nat", "assign_ord"}},
        {"goodstein run", {"run", "goodstein_step"}},
        {"goodstein verify", {"verify_descent", "verify_majorize"}},
        {"ell-tower", {"ell_tower"}},
        {"enum", {"enumerate_terms"}},
    };
    return table;
}

std::vector<std::string> operation_names() {
    return {
        "compare",      "add",          "mul_nat",        "norm",
        "max_coefficient", "enumerate_terms", "parse",     "print",
        "g0",           "g1",           "is_ot",          "is_ot0",
        "tp",           "fs_step",      "iter_descent",   "step_le",
        "check_bachmann", "verify_majorize", "fgh_eval",  "substitute",
        "truncate",     "is_psi0_nesting_free", "classify_gap", "hardy",
        "ladder",       "knf_decompose", "knf_oracle",    "knf_value",
        "bc_nat",       "bc_ord",       "bc_context",     "assign_nat",
        "assign_ord",   "assign_context", "goodstein_step", "run",
        "verify_descent", "ell_tower",
    };
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    struct Vars {
        std::uint64_t max_steps = Budget{}.max_steps;
        std::uint64_t max_bits = Budget{}.max_bits;
        std::string format = "text";
        std::string a, b, x, input, path, below;
        std::string m, k, n, start, count, rung;
        std::uint64_t bound = 0;
        std::uint64_t run_cap = 1'000'000;
        std::string bc_at, assign_at;
        int exit_override = 0;
    } v;

    CLI::App app{"Exact calculator for a two-level collapsing ordinal notation system"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--max-steps", v.max_steps, "Step budget for evaluations")
        ->envname("ORDCALC_MAX_STEPS");
    app.add_option("--max-bits", v.max_bits, "Bit-size budget for numeric values")
        ->envname("ORDCALC_MAX_BITS");
    app.add_option("--format", v.format, "Output format")
        ->check(CLI::IsMember({"text", "records"}))
        ->capture_default_str();

    auto budget = [&] { return Budget{v.max_steps, v.max_bits}; };
    auto records = [&] { return v.format == "records"; };
    auto emit = [&](const ordered_json& j, const std::string& text) {
        if (records())
            out << j.dump() << '\n';
        else
            out << text << '\n';
    };
    auto bool_text = [](bool b) { return b ? "true" : "false"; };

    // ---- term plumbing --------------------------------------------------

    auto* parse_cmd = app.add_subcommand("parse", "Parse a term and report its canonical form");
    parse_cmd->add_option("term", v.a)->required();
    parse_cmd->callback([&] {
        TermPtr t = parse_term(v.a);
        ordered_json j{{"op", "parse"},
                       {"input", v.a},
                       {"term", print_term(t)},
                       {"norm", nat_json(norm(t))},
                       {"natural", t->is_natural()}};
        emit(j, print_term(t) + " norm=" + norm(t).str() +
                    " natural=" + (t->is_natural() ? "true" : "false"));
    });

    auto* print_cmd = app.add_subcommand("print", "Print a term in canonical spelling");
    print_cmd->add_option("term", v.a)->required();
    print_cmd->callback([&] {
        TermPtr t = parse_term(v.a);
        emit(ordered_json{{"op", "print"}, {"term", print_term(t)}}, print_term(t));
    });

    auto* cmp_cmd = app.add_subcommand("cmp", "Compare two terms (LT / EQ / GT)");
    cmp_cmd->add_option("a", v.a)->required();
    cmp_cmd->add_option("b", v.b)->required();
    cmp_cmd->callback([&] {
        Ordering o = compare(parse_term(v.a), parse_term(v.b));
        const char* s = o == Ordering::Less ? "LT" : o == Ordering::Equal ? "EQ" : "GT";
        emit(ordered_json{{"op", "cmp"}, {"a", v.a}, {"b", v.b}, {"result", s}}, s);
    });

    auto* add_cmd = app.add_subcommand("add", "Add two terms (with absorption)");
    add_cmd->add_option("a", v.a)->required();
    add_cmd->add_option("b", v.b)->required();
    add_cmd->callback([&] {
        TermPtr r = add(parse_term(v.a), parse_term(v.b));
        emit(ordered_json{{"op", "add"}, {"result", print_term(r)}}, print_term(r));
    });

    auto* mul_cmd = app.add_subcommand("mul", "Multiply a principal term by a natural");
    mul_cmd->add_option("a", v.a)->required();
    mul_cmd->add_option("n", v.n)->required();
    mul_cmd->callback([&] {
        TermPtr r = mul_nat(parse_term(v.a), nat_arg(v.n));
        emit(ordered_json{{"op", "mul"}, {"result", print_term(r)}}, print_term(r));
    });

    auto* norm_cmd = app.add_subcommand("norm", "Structural norm and maximal coefficient");
    norm_cmd->add_option("term", v.a)->required();
    norm_cmd->callback([&] {
        TermPtr t = parse_term(v.a);
        Nat n = norm(t);
        TermPtr mc = max_coefficient(t);
        emit(ordered_json{{"op", "norm"}, {"norm", nat_json(n)}, {"mc", print_term(mc)}},
             "norm=" + n.str() + " mc=" + print_term(mc));
    });

    auto* enum_cmd = app.add_subcommand("enum", "Enumerate canonical terms up to a norm bound");
    enum_cmd->add_option("bound", v.bound)->required();
    enum_cmd->add_option("--below", v.below, "Keep only terms strictly below this term");
    enum_cmd->callback([&] {
        TermPtr below = v.below.empty() ? nullptr : parse_term(v.below);
        auto terms = enumerate_terms(static_cast<unsigned>(v.bound), below, budget());
        if (records()) {
            ordered_json list = ordered_json::array();
            for (const auto& t : terms) list.push_back(print_term(t));
            out << ordered_json{{"op", "enum"}, {"count", terms.size()}, {"terms", list}}.dump()
                << '\n';
        } else {
            out << "count=" << terms.size() << '\n';
            for (const auto& t : terms) out << print_term(t) << '\n';
        }
    });

    // ---- membership and guards -------------------------------------------

    auto* ot_cmd = app.add_subcommand("ot-check", "Well-formed notation check");
    ot_cmd->add_option("term", v.a)->required();
    ot_cmd->callback([&] {
        bool r = is_ot(parse_term(v.a));
        emit(ordered_json{{"op", "ot-check"}, {"result", r}}, bool_text(r));
    });

    auto* ot0_cmd = app.add_subcommand("ot0-check", "Countable-fragment membership check");
    ot0_cmd->add_option("term", v.a)->required();
    ot0_cmd->callback([&] {
        bool r = is_ot0(parse_term(v.a));
        emit(ordered_json{{"op", "ot0-check"}, {"result", r}}, bool_text(r));
    });

    auto* g0_cmd = app.add_subcommand("g0", "Level-0 guarded arguments");
    g0_cmd->add_option("term", v.a)->required();
    g0_cmd->callback([&] {
        auto set = g0(parse_term(v.a));
        ordered_json list = ordered_json::array();
        for (const auto& t : set) list.push_back(print_term(t));
        emit(ordered_json{{"op", "g0"}, {"set", list}}, set_text(set));
    });

    auto* g1_cmd = app.add_subcommand("g1", "Level-1 guarded arguments");
    g1_cmd->add_option("term", v.a)->required();
    g1_cmd->callback([&] {
        auto set = g1(parse_term(v.a));
        ordered_json list = ordered_json::array();
        for (const auto& t : set) list.push_back(print_term(t));
        emit(ordered_json{{"op", "g1"}, {"set", list}}, set_text(set));
    });

    // ---- steps and hierarchies -------------------------------------------

    auto* tp_cmd = app.add_subcommand("tp", "Limit type of a term");
    tp_cmd->add_option("term", v.a)->required();
    tp_cmd->callback([&] {
        std::string name = cofinality_name(tp(parse_term(v.a)));
        emit(ordered_json{{"op", "tp"}, {"result", name}}, name);
    });

    auto* fs_cmd = app.add_subcommand("fs", "One fundamental-sequence step a[x]");
    fs_cmd->add_option("term", v.a)->required();
    fs_cmd->add_option("index", v.x)->required();
    fs_cmd->callback([&] {
        Meter meter(budget());
        TermPtr r = fs_step(parse_term(v.a), parse_term(v.x), meter);
        emit(ordered_json{{"op", "fs"}, {"result", print_term(r)}}, print_term(r));
    });

    auto* descend_cmd = app.add_subcommand("descend", "Iterated steps with increasing indices");
    descend_cmd->add_option("term", v.a)->required();
    descend_cmd->add_option("start", v.start)->required();
    descend_cmd->add_option("count", v.count)->required();
    descend_cmd->callback([&] {
        Meter meter(budget());
        DescentResult r = iter_descent(parse_term(v.a), nat_arg(v.start), nat_arg(v.count), meter);
        if (records()) {
            ordered_json list = ordered_json::array();
            for (const auto& t : r.points) list.push_back(print_term(t));
            out << ordered_json{{"op", "descend"},
                                {"points", list},
                                {"reached_zero", r.reached_zero}}
                       .dump()
                << '\n';
        } else {
            for (const auto& t : r.points) out << print_term(t) << '\n';
            out << "reached-zero=" << bool_text(r.reached_zero) << '\n';
        }
    });

    auto* steple_cmd = app.add_subcommand("step-le", "Reachability along k-th steps");
    steple_cmd->add_option("a", v.a)->required();
    steple_cmd->add_option("b", v.b)->required();
    steple_cmd->add_option("k", v.k)->required();
    steple_cmd->callback([&] {
        Meter meter(budget());
        bool r = step_le(parse_term(v.a), parse_term(v.b), nat_arg(v.k), meter);
        emit(ordered_json{{"op", "step-le"}, {"result", r}}, bool_text(r));
    });

    auto* bach_cmd = app.add_subcommand("bachmann", "Squeeze property of steps for (a, b, x)");
    bach_cmd->add_option("a", v.a)->required();
    bach_cmd->add_option("b", v.b)->required();
    bach_cmd->add_option("x", v.x)->required();
    bach_cmd->callback([&] {
        Meter meter(budget());
        bool r = check_bachmann(parse_term(v.a), parse_term(v.b), parse_term(v.x), meter);
        emit(ordered_json{{"op", "bachmann"}, {"result", r}}, bool_text(r));
    });

    auto* fgh_cmd = app.add_subcommand("fgh", "Fast-growing hierarchy value");
    fgh_cmd->add_option("term", v.a)->required();
    fgh_cmd->add_option("n", v.n)->required();
    fgh_cmd->callback([&] {
        Meter meter(budget());
        Nat r = fgh_eval(parse_term(v.a), nat_arg(v.n), meter);
        emit(ordered_json{{"op", "fgh"}, {"result", nat_json(r)}}, r.str());
    });

    auto* hardy_cmd = app.add_subcommand("hardy", "Multiplicative Hardy value at base k");
    hardy_cmd->add_option("term", v.a)->required();
    hardy_cmd->add_option("k", v.k)->required();
    hardy_cmd->callback([&] {
        Nat r = hardy(parse_term(v.a), nat_arg(v.k), budget());
        emit(ordered_json{{"op", "hardy"}, {"result", nat_json(r)}}, r.str());
    });

    auto* ladder_cmd = app.add_subcommand("ladder", "Approximation ladder rung of a limit term");
    ladder_cmd->add_option("term", v.a)->required();
    ladder_cmd->add_option("rung", v.rung)->required();
    ladder_cmd->add_option("k", v.k)->required();
    ladder_cmd->callback([&] {
        TermPtr r = ladder(parse_term(v.a), nat_arg(v.k), nat_arg(v.rung), budget());
        emit(ordered_json{{"op", "ladder"}, {"result", print_term(r)}}, print_term(r));
    });

    // ---- normal forms and base change --------------------------------------

    auto* knf_cmd = app.add_subcommand("knf", "Base-k normal form of a natural");
    knf_cmd->add_option("m", v.m)->required();
    knf_cmd->add_option("k", v.k)->required();
    knf_cmd->callback([&] {
        KNF nf = knf_decompose(nat_arg(v.m), nat_arg(v.k), budget());
        Nat back = knf_value(nf, budget());
        bool ok = back == nat_arg(v.m);
        ordered_json j{{"op", "knf"}, {"knf", knf_json(nf)}, {"value_check", ok}};
        emit(j, print_knf(nf) + " value-check=" + (ok ? "ok" : "FAILED"));
    });

    auto* knfo_cmd = app.add_subcommand("knf-oracle", "Pool-based reference normal form");
    knfo_cmd->add_option("m", v.m)->required();
    knfo_cmd->add_option("k", v.k)->required();
    knfo_cmd->callback([&] {
        KNF nf = knf_oracle(nat_arg(v.m), nat_arg(v.k), budget());
        emit(ordered_json{{"op", "knf-oracle"}, {"knf", knf_json(nf)}}, print_knf(nf));
    });

    auto* bcn_cmd = app.add_subcommand("bc-nat", "Rewrite a natural from base k to base k+1");
    bcn_cmd->add_option("m", v.m)->required();
    bcn_cmd->add_option("k", v.k)->required();
    bcn_cmd->callback([&] {
        Nat r = bc_nat(nat_arg(v.m), nat_arg(v.k), budget());
        emit(ordered_json{{"op", "bc-nat"}, {"result", nat_json(r)}}, r.str());
    });

    auto* bco_cmd = app.add_subcommand("bc-ord", "Rewrite a notation from base k to base k+1");
    bco_cmd->add_option("term", v.a)->required();
    bco_cmd->add_option("k", v.k)->required();
    bco_cmd->callback([&] {
        TermPtr r = bc_ord(parse_term(v.a), nat_arg(v.k), budget());
        emit(ordered_json{{"op", "bc-ord"}, {"result", print_term(r)}}, print_term(r));
    });

    auto* assign_cmd =
        app.add_subcommand("assign", "Ordinal assigned one collapse level up at base k");
    assign_cmd->add_option("input", v.input, "natural number or term")->required();
    assign_cmd->add_option("k", v.k)->required();
    assign_cmd->callback([&] {
        TermPtr r = is_all_digits(v.input)
                        ? assign_nat(nat_arg(v.input), nat_arg(v.k), budget())
                        : assign_ord(parse_term(v.input), nat_arg(v.k), budget());
        emit(ordered_json{{"op", "assign"}, {"result", print_term(r)}}, print_term(r));
    });

    // ---- gap classification -------------------------------------------------

    auto* gap_cmd = app.add_subcommand("classify-gap", "How a sits inside the gap below b");
    gap_cmd->add_option("a", v.a)->required();
    gap_cmd->add_option("b", v.b)->required();
    gap_cmd->add_option("--bc", v.bc_at, "Also rewrite the context from this base to base+1");
    gap_cmd->add_option("--assign", v.assign_at,
                        "Also lift the context one collapse level at this base");
    gap_cmd->callback([&] {
        TermPtr a = parse_term(v.a);
        TermPtr b = parse_term(v.b);
        Meter meter(budget());
        GapCase gc = classify_gap(a, b, meter);
        bool verified = verify_gap(a, b, gc, meter);

        ContextPtr lambda;
        TermPtr witness;
        if (const auto* nh = std::get_if<GapNatHole>(&gc)) {
            lambda = nh->lambda;
            witness = nat(nh->t);
        } else if (const auto* ol = std::get_if<GapOmegaLimit>(&gc)) {
            lambda = ol->lambda;
            witness = ol->gamma;
        } else if (const auto* pm = std::get_if<GapPsiMultiple>(&gc)) {
            lambda = pm->lambda;
            witness = mul_nat(psi(pm->level, pm->gamma), pm->s);
        } else if (const auto* ou = std::get_if<GapOmegaUncountable>(&gc)) {
            lambda = ou->lambda;
            witness = ou->gamma;
        }

        ordered_json j{{"op", "classify-gap"},
                       {"a", print_term(a)},
                       {"b", print_term(b)},
                       {"case", gap_case_name(gc)},
                       {"detail", print_gap(gc)},
                       {"verified", verified}};
        std::ostringstream text;
        text << print_gap(gc) << "\nverified=" << bool_text(verified);
        if (lambda) {
            j["nesting_free"] = is_psi0_nesting_free(lambda);
            j["filled"] = print_term(substitute(lambda, witness));
            j["truncated"] = print_context(truncate_context(lambda));
            text << "\nnesting-free=" << bool_text(is_psi0_nesting_free(lambda))
                 << "\nfilled=" << print_term(substitute(lambda, witness))
                 << "\ntruncated=" << print_context(truncate_context(lambda));
            if (!v.bc_at.empty()) {
                ContextPtr bc = bc_context(lambda, nat_arg(v.bc_at), budget());
                j["bc"] = print_context(bc);
                text << "\nbc=" << print_context(bc);
            }
            if (!v.assign_at.empty()) {
                ContextPtr lifted = assign_context(lambda, nat_arg(v.assign_at), budget());
                j["assign"] = print_context(lifted);
                text << "\nassign=" << print_context(lifted);
            }
        }
        emit(j, text.str());
    });

    // ---- goodstein ------------------------------------------------------------

    auto* gs_cmd = app.add_subcommand("goodstein", "Goodstein process");
    gs_cmd->require_subcommand(1);

    auto* gsrun_cmd = gs_cmd->add_subcommand("run", "Run the process from a start value");
    gsrun_cmd->add_option("ell", v.m)->required();
    gsrun_cmd->add_option("--max-steps", v.run_cap, "Iteration cap for this run")
        ->capture_default_str();
    gsrun_cmd->add_option("--trace", v.path, "Write the trace to this file");
    gsrun_cmd->callback([&] {
        auto stop = [] { return g_stop_flag && g_stop_flag->load(); };
        RunResult r = goodstein_run(nat_arg(v.m), Nat(v.run_cap), budget(), stop);
        if (!v.path.empty()) {
            std::ofstream f(v.path, std::ios::binary);
            if (!f) throw DomainError("cannot open trace file for writing: " + v.path);
            write_trace(r, f);
        }
        std::string text;
        if (r.terminated)
            text = "terminated k=" + r.final_k->str();
        else if (r.interrupted)
            text = "interrupted k=" + (r.entries.empty() ? std::string("0")
                                                         : r.entries.back().k.str());
        else if (r.budget_exhausted)
            text = "budget exhausted after k=" +
                   (r.entries.empty() ? std::string("0") : r.entries.back().k.str());
        else
            text = "stopped at iteration cap k=" +
                   (r.entries.empty() ? std::string("0") : r.entries.back().k.str());
        if (records()) {
            std::ostringstream lines;
            write_trace(r, lines);
            out << lines.str();
            ordered_json j{{"op", "goodstein-run"},
                           {"entries", r.entries.size()},
                           {"terminated", r.terminated}};
            if (r.final_k) j["final_k"] = nat_json(*r.final_k);
            j["interrupted"] = r.interrupted;
            j["budget_exhausted"] = r.budget_exhausted;
            out << j.dump() << '\n';
        } else {
            out << text << '\n';
        }
        if (r.budget_exhausted) throw BudgetError(r.note);
        if (r.interrupted) v.exit_override = 130;
    });

    auto* gsver_cmd = gs_cmd->add_subcommand("verify", "Re-check a recorded trace");
    gsver_cmd->add_option("trace", v.path)->required();
    gsver_cmd->callback([&] {
        std::ifstream f(v.path, std::ios::binary);
        if (!f) throw DomainError("cannot open trace file: " + v.path);
        RunResult r = read_trace(f);
        bool consistent = true;
        for (const TraceEntry& e : r.entries) {
            if (e.base != e.k + 2) consistent = false;
            KNF nf = knf_decompose(e.value, e.base, budget());
            if (!knf_eq(nf, e.knf)) consistent = false;
            if (!term_eq(assign_nat(e.value, e.base, budget()), e.ordinal)) consistent = false;
            if (!consistent) break;
        }
        bool descent = verify_descent(r, budget());
        bool majorize = true;
        try {
            std::vector<TermPtr> chain;
            for (const TraceEntry& e : r.entries) chain.push_back(e.ordinal);
            Meter meter(budget());
            majorize = verify_majorize(chain, meter);
        } catch (const DomainError&) {
            majorize = false;
        }
        ordered_json j{{"op", "goodstein-verify"},
                       {"entries", r.entries.size()},
                       {"consistent", consistent},
                       {"descent", descent},
                       {"majorize", majorize}};
        std::ostringstream text;
        text << "entries=" << r.entries.size() << " consistent=" << bool_text(consistent)
             << " descent=" << bool_text(descent) << " majorize=" << bool_text(majorize);
        emit(j, text.str());
    });

    auto* tower_cmd = app.add_subcommand("ell-tower", "Iterated Hardy tower over base 2");
    tower_cmd->add_option("n", v.n)->required();
    tower_cmd->callback([&] {
        Nat r = ell_tower(nat_arg(v.n), budget());
        emit(ordered_json{{"op", "ell-tower"}, {"result", nat_json(r)}}, r.str());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 3;
    } catch (const BudgetError& e) {
        err << "budget error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return v.exit_override;
}

}  // namespace ordcalc
