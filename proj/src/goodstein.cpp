#include "ordcalc/goodstein.hpp"

#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ordcalc/assign.hpp"
#include "ordcalc/base_change.hpp"
#include "ordcalc/fundamental.hpp"

namespace ordcalc {

using ordered_json = nlohmann::ordered_json;

Nat goodstein_step(const Nat& value, const Nat& k, const Budget& budget) {
    if (value < 0 || k < 0) throw DomainError("goodstein step needs naturals");
    if (value == 0) return 0;
    return bc_nat(value, k + 2, budget) - 1;
}

RunResult goodstein_run(const Nat& ell, const Nat& max_steps, const Budget& budget,
                        const std::function<bool()>& stop_requested) {
    if (ell < 0 || max_steps < 0) throw DomainError("goodstein run needs naturals");
    RunResult r;
    Nat k = 0;
    Nat value = ell;
    while (true) {
        TraceEntry e;
        e.k = k;
        e.base = k + 2;
        e.value = value;
        try {
            e.knf = knf_decompose(value, e.base, budget);
            e.ordinal = assign_nat(value, e.base, budget);
        } catch (const BudgetError& ex) {
            r.budget_exhausted = true;
            r.note = ex.what();
            return r;
        }
        r.entries.push_back(std::move(e));
        if (value == 0) {
            r.terminated = true;
            r.final_k = k;
            return r;
        }
        if (k >= max_steps) return r;
        if (stop_requested && stop_requested()) {
            r.interrupted = true;
            r.note = "interrupted";
            return r;
        }
        try {
            value = goodstein_step(value, k, budget);
        } catch (const BudgetError& ex) {
            r.budget_exhausted = true;
            r.note = ex.what();
            return r;
        }
        k += 1;
    }
}

bool verify_descent(const RunResult& r, const Budget& budget) {
    Meter meter(budget);
    for (size_t i = 0; i + 1 < r.entries.size(); ++i) {
        const TraceEntry& cur = r.entries[i];
        const TraceEntry& nxt = r.entries[i + 1];
        if (cur.value == 0) continue;
        if (!cur.ordinal || !nxt.ordinal) return false;
        if (!term_lt(nxt.ordinal, cur.ordinal)) return false;
        try {
            if (!term_le(fs_step(cur.ordinal, nat(cur.base), meter), nxt.ordinal)) return false;
        } catch (const DomainError&) {
            return false;
        }
    }
    return true;
}

Nat ell_tower(const Nat& n, const Budget& budget) {
    if (n < 0) throw DomainError("tower height must be a natural number");
    Nat v = 0;
    for (Nat i = 0; i < n; ++i) v = hardy(nat(v), 2, budget);
    return v;
}

// -- trace io ------------------------------------------------------------

std::size_t trace_digit_threshold() { return 256; }

namespace {

ordered_json nat_field(const Nat& v) {
    std::string s = v.str();
    if (s.size() <= trace_digit_threshold()) return s;
    ordered_json big;
    big["digits"] = s.size();
    big["prefix"] = s.substr(0, 32);
    return big;
}

Nat nat_from_field(const ordered_json& j, const char* key) {
    if (!j.is_string())
        throw DomainError(std::string("trace field ") + key +
                          " was written in the lossy large-value form");
    const std::string s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string("trace field ") + key + " must be a decimal string", 0);
    return Nat(s);
}

}  // namespace

void write_trace(const RunResult& r, std::ostream& out) {
    for (const TraceEntry& e : r.entries) {
        ordered_json line;
        line["k"] = nat_field(e.k);
        line["base"] = nat_field(e.base);
        line["value"] = nat_field(e.value);
        ordered_json knf;
        if (e.knf.literal) {
            knf["literal"] = nat_field(*e.knf.literal);
        } else {
            knf["alpha"] = print_term(e.knf.alpha);
            knf["p"] = nat_field(e.knf.p);
            knf["q"] = nat_field(e.knf.q);
        }
        line["knf"] = knf;
        line["ordinal"] = print_term(e.ordinal);
        out << line.dump() << '\n';
    }
}

RunResult read_trace(std::istream& in) {
    RunResult r;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ordered_json j;
        try {
            j = ordered_json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("trace line: ") + e.what(), 0);
        }
        if (!j.is_object() || !j.contains("k") || !j.contains("base") ||
            !j.contains("value") || !j.contains("knf") || !j.contains("ordinal"))
            throw ParseError("trace line missing a required key", 0);
        TraceEntry e;
        e.k = nat_from_field(j["k"], "k");
        e.base = nat_from_field(j["base"], "base");
        e.value = nat_from_field(j["value"], "value");
        const ordered_json& knf = j["knf"];
        e.knf.k = e.base;
        if (knf.contains("literal")) {
            e.knf.literal = nat_from_field(knf["literal"], "knf.literal");
        } else {
            if (!knf.contains("alpha") || !knf.contains("p") || !knf.contains("q"))
                throw ParseError("trace knf missing a required key", 0);
            e.knf.alpha = parse_term(knf["alpha"].get<std::string>());
            e.knf.p = nat_from_field(knf["p"], "knf.p");
            e.knf.q = nat_from_field(knf["q"], "knf.q");
        }
        e.ordinal = parse_term(j["ordinal"].get<std::string>());
        r.entries.push_back(std::move(e));
    }
    if (!r.entries.empty() && r.entries.back().value == 0) {
        r.terminated = true;
        r.final_k = r.entries.back().k;
    }
    return r;
}

}  // namespace ordcalc
