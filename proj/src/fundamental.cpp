#include "ordcalc/fundamental.hpp"

#include <cassert>

namespace ordcalc {

std::string cofinality_name(Cofinality c) {
    switch (c) {
        case Cofinality::Zero: return "zero";
        case Cofinality::One: return "one";
        case Cofinality::Omega: return "omega";
        case Cofinality::OmegaUnc1: return "Omega";
        case Cofinality::OmegaUnc2: return "Omega2";
    }
    throw DomainError("unknown cofinality");
}

int cofinality_level(Cofinality c) {
    switch (c) {
        case Cofinality::Omega: return 0;
        case Cofinality::OmegaUnc1: return 1;
        case Cofinality::OmegaUnc2: return 2;
        default: throw DomainError("cofinality level of a non-limit");
    }
}

static Cofinality limit_at(int level) {
    switch (level) {
        case 0: return Cofinality::Omega;
        case 1: return Cofinality::OmegaUnc1;
        case 2: return Cofinality::OmegaUnc2;
    }
    throw DomainError("limit level out of range");
}

Cofinality tp(const TermPtr& a) {
    if (!a) throw DomainError("tp on null term");
    if (a->is_zero()) return Cofinality::Zero;
    if (a->tp_cache_ >= 0) return static_cast<Cofinality>(a->tp_cache_);
    const Part& last = a->parts().back();
    Cofinality result;
    if (last.level == kUnitLevel) {
        result = Cofinality::One;
    } else if (last.arg->is_zero()) {
        result = limit_at(last.level);
    } else {
        Cofinality t = tp(last.arg);
        assert(t != Cofinality::Zero);
        if (t == Cofinality::One) {
            result = Cofinality::Omega;
        } else {
            int lvl = cofinality_level(t);
            if (lvl == last.level + 1)
                result = Cofinality::Omega;
            else if (lvl <= last.level)
                result = t;
            else
                throw DomainError("no step clause for a level-" +
                                  std::to_string(last.level) +
                                  " collapse over an argument of cofinality " +
                                  cofinality_name(t));
        }
    }
    a->tp_cache_ = static_cast<signed char>(result);
    return result;
}

namespace {

// Step of a single principal psi(level, arg); the index domain has already
// been validated against tp of the whole term.
TermPtr principal_step(int level, const TermPtr& arg, const TermPtr& x, Meter& meter) {
    if (arg->is_zero()) return x;  // the fixed-point clause: Omega_i[x] = x
    Cofinality t = tp(arg);
    if (t == Cofinality::One) {
        // psi(level, gamma + 1)[n] = psi(level, gamma) * n
        Nat n = *x->as_natural();
        meter.check_bits(n);
        return mul_nat(psi(level, predecessor(arg)), n);
    }
    int lvl = cofinality_level(t);
    if (lvl <= level) return psi(level, fs_step(arg, x, meter));
    if (lvl == level + 1) {
        // Diagonal clause: iterate the collapse from below.
        Nat n = *x->as_natural();
        TermPtr r = psi(level, fs_step(arg, zero(), meter));
        for (Nat j = 1; j <= n; ++j) {
            meter.tick();
            r = psi(level, fs_step(arg, r, meter));
        }
        return r;
    }
    throw DomainError("no step clause for a level-" + std::to_string(level) +
                      " collapse over an argument of cofinality " + cofinality_name(t));
}

}  // namespace

TermPtr fs_step(const TermPtr& a, const TermPtr& x, Meter& meter) {
    if (!a || !x) throw DomainError("fs_step on null term");
    meter.tick();
    if (a->is_zero()) {
        if (!x->is_natural())
            throw DomainError("step index for 0 must be a natural number");
        return zero();
    }
    if (a->is_successor()) return predecessor(a);  // (b + 1)[x] = b for every x

    Cofinality t = tp(a);
    switch (t) {
        case Cofinality::Omega:
            if (!x->is_natural())
                throw DomainError("step index must be a natural number, got '" +
                                  print_term(x) + "'");
            break;
        case Cofinality::OmegaUnc1:
            if (!term_lt(x, omega1()))
                throw DomainError("step index must be below Om, got '" +
                                  print_term(x) + "'");
            break;
        case Cofinality::OmegaUnc2:
            if (!term_lt(x, omega2()))
                throw DomainError("step index must be below Om2, got '" +
                                  print_term(x) + "'");
            break;
        default:
            assert(false);
    }

    std::vector<Part> prefix = a->parts();
    Part last = prefix.back();
    if (last.count == 1)
        prefix.pop_back();
    else
        prefix.back().count -= 1;

    TermPtr stepped = principal_step(last.level, last.arg, x, meter);
    std::vector<Part> parts = std::move(prefix);
    for (const Part& p : stepped->parts()) parts.push_back(p);
    return term_from_parts(std::move(parts));
}

DescentResult iter_descent(const TermPtr& a, const Nat& start, const Nat& count,
                           Meter& meter) {
    if (!a) throw DomainError("iter_descent on null term");
    DescentResult result;
    result.points.push_back(a);
    TermPtr cur = a;
    for (Nat i = 0; i < count; ++i) {
        if (cur->is_zero()) break;
        cur = fs_step(cur, nat(start + i), meter);
        result.points.push_back(cur);
    }
    result.reached_zero = cur->is_zero();
    return result;
}

bool step_le(const TermPtr& a, const TermPtr& b, const Nat& k, Meter& meter) {
    if (!a || !b) throw DomainError("step_le on null term");
    TermPtr kterm = nat(k);
    TermPtr cur = b;
    while (true) {
        meter.tick();
        Ordering c = compare(a, cur);
        if (c == Ordering::Equal) return true;
        if (c == Ordering::Greater) return false;
        // a < cur, so cur is nonzero and its step strictly decreases
        cur = fs_step(cur, kterm, meter);
    }
}

bool single_step_lt_n(const TermPtr& a, const TermPtr& b, const Nat& n, Meter& meter) {
    if (!a || !b) throw DomainError("single_step_lt_n on null term");
    for (Nat x = 0; x < n; ++x) {
        meter.tick();
        if (term_eq(fs_step(b, nat(x), meter), a)) return true;
    }
    return false;
}

bool check_bachmann(const TermPtr& a, const TermPtr& b, const TermPtr& x, Meter& meter) {
    if (!a || !b || !x) throw DomainError("check_bachmann on null term");
    TermPtr ax = fs_step(a, x, meter);
    if (!(term_lt(ax, b) && term_lt(b, a))) return true;
    TermPtr b1 = fs_step(b, one(), meter);
    return term_le(ax, b1) && norm(ax) < norm(b);
}

bool verify_majorize(const std::vector<TermPtr>& seq, Meter& meter) {
    for (std::size_t n = 0; n + 1 < seq.size(); ++n) {
        TermPtr lower = fs_step(seq[n], nat(n + 1), meter);
        if (!(term_le(lower, seq[n + 1]) && term_le(seq[n + 1], seq[n])))
            throw DomainError("sequence violates the sandwich precondition at index " +
                              std::to_string(n + 1));
    }
    if (seq.empty()) return true;
    TermPtr diag = seq[0];
    for (std::size_t n = 0; n < seq.size(); ++n) {
        diag = fs_step(diag, nat(n), meter);
        if (term_lt(seq[n], diag)) return false;
    }
    return true;
}

Nat fgh_eval(const TermPtr& a, const Nat& n, Meter& meter) {
    if (!a) throw DomainError("fgh_eval on null term");
    meter.tick();
    meter.check_bits(n);
    if (a->is_zero()) return n + 1;
    if (a->is_successor()) {
        TermPtr p = predecessor(a);
        Nat v = n;
        for (Nat i = 0; i < n; ++i) v = fgh_eval(p, v, meter);
        return v;
    }
    if (tp(a) != Cofinality::Omega)
        throw DomainError("fast-growing evaluation needs a countable term");
    return fgh_eval(fs_step(a, nat(n), meter), n, meter);
}

}  // namespace ordcalc
