#include "ordcalc/normal_form.hpp"

#include <algorithm>

namespace ordcalc {

namespace {

void insert_sorted(std::vector<TermPtr>& set, const TermPtr& t) {
    auto it = std::lower_bound(set.begin(), set.end(), t,
                               [](const TermPtr& x, const TermPtr& y) { return term_lt(x, y); });
    if (it != set.end() && term_eq(*it, t)) return;
    set.insert(it, t);
}

void gather_g0(const TermPtr& a, std::vector<TermPtr>& out) {
    for (const Part& p : a->parts()) {
        if (p.level == kUnitLevel) continue;
        if (p.level == 0) insert_sorted(out, p.arg);
        gather_g0(p.arg, out);
    }
}

void gather_g1(const TermPtr& a, std::vector<TermPtr>& out) {
    for (const Part& p : a->parts()) {
        if (p.level == kUnitLevel || p.level == 0) continue;
        if (p.level == 1) insert_sorted(out, p.arg);
        gather_g1(p.arg, out);
    }
}

}  // namespace

std::vector<TermPtr> g0(const TermPtr& a) {
    if (!a) throw DomainError("g0 on null term");
    std::vector<TermPtr> out;
    gather_g0(a, out);
    return out;
}

std::vector<TermPtr> g1(const TermPtr& a) {
    if (!a) throw DomainError("g1 on null term");
    std::vector<TermPtr> out;
    gather_g1(a, out);
    return out;
}

TermPtr ot0_bound() {
    static const TermPtr t = psi(1, omega2());
    return t;
}

bool is_ot(const TermPtr& a) {
    if (!a) throw DomainError("is_ot on null term");
    for (const Part& p : a->parts()) {
        if (p.level == kUnitLevel) continue;
        if (!is_ot(p.arg)) return false;
        if (p.level == 0) {
            if (!term_lt(p.arg, omega2())) return false;
            for (const TermPtr& g : g0(p.arg))
                if (!term_lt(g, p.arg)) return false;
        } else if (p.level == 1) {
            for (const TermPtr& g : g1(p.arg))
                if (!term_lt(g, p.arg)) return false;
        }
    }
    return true;
}

bool is_ot0(const TermPtr& a) {
    if (!is_ot(a)) return false;
    if (!term_lt(a, ot0_bound())) return false;
    for (const TermPtr& g : g0(a))
        if (!term_lt(g, ot0_bound())) return false;
    return true;
}

}  // namespace ordcalc
