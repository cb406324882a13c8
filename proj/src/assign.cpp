#include "ordcalc/assign.hpp"

#include <string>

#include "ordcalc/hardy.hpp"
#include "ordcalc/normal_form.hpp"

namespace ordcalc {

namespace {

TermPtr assign_ord_rec(const TermPtr& a, const Nat& k, const Budget& budget);

TermPtr assign_nat_rec(const Nat& m, const Nat& k, const Budget& budget) {
    if (m < k) return nat(m);
    KNF nf;
    try {
        nf = knf_decompose(m, k, budget);
    } catch (const BudgetError& e) {
        throw BudgetError(std::string("assignment, decomposition stage: ") + e.what());
    }
    TermPtr head = mul_nat(psi(0, assign_ord_rec(nf.alpha, k, budget)), nf.p);
    return add(head, assign_nat_rec(nf.q, k, budget));
}

TermPtr assign_ord_rec(const TermPtr& a, const Nat& k, const Budget& budget) {
    std::vector<Part> parts;
    parts.reserve(a->parts().size());
    for (const Part& p : a->parts()) {
        if (p.level == kUnitLevel) {
            TermPtr mapped = assign_nat_rec(p.count, k, budget);
            const auto& mp = mapped->parts();
            parts.insert(parts.end(), mp.begin(), mp.end());
        } else if (p.level == 2) {
            throw DomainError("assignment is undefined at collapse level 2");
        } else {
            parts.push_back(Part{p.level + 1, assign_ord_rec(p.arg, k, budget), p.count});
        }
    }
    return term_from_parts(std::move(parts));
}

}  // namespace

TermPtr assign_nat(const Nat& m, const Nat& k, const Budget& budget) {
    if (m < 0) throw DomainError("assignment needs a natural number");
    if (k < 2) throw DomainError("assignment needs base >= 2");
    return assign_nat_rec(m, k, budget);
}

TermPtr assign_ord(const TermPtr& a, const Nat& k, const Budget& budget) {
    if (!a) throw DomainError("assignment on null term");
    if (k < 2) throw DomainError("assignment needs base >= 2");
    if (!is_ot0(a) || !term_lt(a, omega1()))
        throw DomainError("assignment needs a countable well-formed notation");
    return assign_ord_rec(a, k, budget);
}

ContextPtr assign_context(const ContextPtr& c, const Nat& k, const Budget& budget) {
    if (!c) throw DomainError("assignment on null context");
    if (k < 2) throw DomainError("assignment needs base >= 2");
    auto map_parts = [&](const std::vector<Part>& in) {
        std::vector<Part> out;
        for (const Part& p : in) {
            if (p.level == kUnitLevel) {
                TermPtr mapped = assign_nat_rec(p.count, k, budget);
                const auto& mp = mapped->parts();
                out.insert(out.end(), mp.begin(), mp.end());
            } else if (p.level == 2) {
                throw DomainError("assignment is undefined at collapse level 2");
            } else {
                out.push_back(Part{p.level + 1, assign_ord_rec(p.arg, k, budget), p.count});
            }
        }
        return out;
    };
    if (c->psi_level == 2) throw DomainError("assignment is undefined at collapse level 2");
    return make_context(map_parts(c->pre),
                        c->psi_level >= 0 ? c->psi_level + 1 : c->psi_level,
                        c->psi_level >= 0 ? assign_context(c->inner, k, budget) : nullptr,
                        map_parts(c->post));
}

}  // namespace ordcalc
