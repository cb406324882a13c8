#include "ordcalc/base_change.hpp"

#include <string>

#include "ordcalc/hardy.hpp"
#include "ordcalc/normal_form.hpp"

namespace ordcalc {

namespace {

TermPtr bc_ord_rec(const TermPtr& a, const Nat& k, const Budget& budget);

Nat bc_nat_rec(const Nat& m, const Nat& k, const Budget& budget) {
    if (m < k) return m;
    KNF nf;
    try {
        nf = knf_decompose(m, k, budget);
    } catch (const BudgetError& e) {
        throw BudgetError(std::string("base change, decomposition stage: ") + e.what());
    }
    TermPtr alpha = bc_ord_rec(nf.alpha, k, budget);
    Nat q = bc_nat_rec(nf.q, k, budget);
    Nat h;
    try {
        h = hardy(alpha, k + 1, budget);
    } catch (const BudgetError& e) {
        throw BudgetError(std::string("base change, re-evaluation stage: ") + e.what());
    }
    Nat result = h * nf.p + q;
    Meter meter(budget);
    meter.check_bits(result);
    return result;
}

TermPtr bc_ord_rec(const TermPtr& a, const Nat& k, const Budget& budget) {
    std::vector<Part> parts;
    parts.reserve(a->parts().size());
    for (const Part& p : a->parts()) {
        if (p.level == kUnitLevel) {
            parts.push_back(Part{kUnitLevel, nullptr, bc_nat_rec(p.count, k, budget)});
        } else if (p.level == 2) {
            throw DomainError("base change is undefined at collapse level 2");
        } else {
            parts.push_back(Part{p.level, bc_ord_rec(p.arg, k, budget), p.count});
        }
    }
    return term_from_parts(std::move(parts));
}

}  // namespace

Nat bc_nat(const Nat& m, const Nat& k, const Budget& budget) {
    if (m < 0) throw DomainError("base change needs a natural number");
    if (k < 2) throw DomainError("base change needs base >= 2");
    return bc_nat_rec(m, k, budget);
}

TermPtr bc_ord(const TermPtr& a, const Nat& k, const Budget& budget) {
    if (!a) throw DomainError("base change on null term");
    if (k < 2) throw DomainError("base change needs base >= 2");
    if (!is_ot0(a)) throw DomainError("base change needs a well-formed notation");
    return bc_ord_rec(a, k, budget);
}

ContextPtr bc_context(const ContextPtr& c, const Nat& k, const Budget& budget) {
    if (!c) throw DomainError("base change on null context");
    if (k < 2) throw DomainError("base change needs base >= 2");
    auto map_parts = [&](const std::vector<Part>& in) {
        std::vector<Part> out;
        out.reserve(in.size());
        for (const Part& p : in) {
            if (p.level == kUnitLevel)
                out.push_back(Part{kUnitLevel, nullptr, bc_nat_rec(p.count, k, budget)});
            else if (p.level == 2)
                throw DomainError("base change is undefined at collapse level 2");
            else
                out.push_back(Part{p.level, bc_ord_rec(p.arg, k, budget), p.count});
        }
        return out;
    };
    return make_context(map_parts(c->pre), c->psi_level,
                        c->psi_level >= 0 ? bc_context(c->inner, k, budget) : nullptr,
                        map_parts(c->post));
}

}  // namespace ordcalc
