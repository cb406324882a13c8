#include "ordcalc/hardy.hpp"

#include <cassert>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ordcalc/fundamental.hpp"
#include "ordcalc/normal_form.hpp"

namespace ordcalc {

namespace {

// Facts about a term's value at a fixed base that hold independently of the
// caller: an exact value is exact for everyone, and a nullopt verdict reached
// under bound B certifies the value exceeds B. Sharing them across evaluator
// instances keeps repeated decompositions from re-walking the same ladders.
// Single-threaded use assumed, as elsewhere in the library.
struct ValueFacts {
    std::unordered_map<std::string, Nat> exact;
    std::unordered_map<std::string, Nat> exceeds;  // value proven > stored bound
};

ValueFacts& value_facts(const Nat& k) {
    static std::map<Nat, ValueFacts> per_base;
    return per_base[k];
}

// Shared evaluator for the exact and the capped flavors. With a bound set,
// eval() returns nullopt exactly when the true value exceeds the bound;
// a rung index that overshoots forces the final value to overshoot as well
// (each later rung value is at least the index it was evaluated at), so
// propagating the verdict through the ladder is sound.
class HardyEval {
public:
    HardyEval(const Nat& k, std::optional<Nat> bound, Meter& meter)
        : k_(k), bound_(std::move(bound)), meter_(meter),
          facts_(value_facts(k)) {
        if (k_ < 2) throw DomainError("base must be at least 2");
    }

    std::optional<Nat> eval(const TermPtr& a) {
        Outcome o = evalx(a);
        if (!o.exact || (bound_ && *o.exact > *bound_)) return std::nullopt;
        return o.exact;
    }

private:
    // Either the exact value, or (with a bound set) a floor the true value
    // provably exceeds.
    struct Outcome {
        std::optional<Nat> exact;
        Nat floor = 0;
    };

    // How many extra factors of k a witnessed partial product is pushed past
    // the bound before giving up on exactness. Short tails complete to the
    // exact value; long tails leave a floor so far beyond any bound a caller
    // can count up to that the cached verdict stays reusable.
    static constexpr int kFloorGrowth = 128;

    Outcome evalx(const TermPtr& a) {
        meter_.tick();
        if (a->is_zero()) {
            if (bound_ && k_ > *bound_) return {std::nullopt, k_ - 1};
            meter_.check_bits(k_);
            return {k_, 0};
        }
        std::string key = print_term(a);
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;

        auto known = facts_.exact.find(key);
        if (known != facts_.exact.end()) {
            if (!bound_) meter_.check_bits(known->second);
            Outcome o{known->second, 0};
            memo_.emplace(std::move(key), o);
            return o;
        }
        if (bound_) {
            auto low = facts_.exceeds.find(key);
            if (low != facts_.exceeds.end() && low->second >= *bound_) {
                Outcome o{std::nullopt, low->second};
                memo_.emplace(std::move(key), o);
                return o;
            }
        }

        Outcome result;
        if (a->is_successor()) {
            // Strip the whole trailing block of units at once.
            Nat units = a->parts().back().count;
            std::vector<Part> rest(a->parts().begin(), a->parts().end() - 1);
            Outcome base = evalx(term_from_parts(std::move(rest)));
            if (base.exact) {
                result = bound_ ? mul_pow_capped(*base.exact, units)
                                : Outcome{mul_pow_exact(*base.exact, units), 0};
            } else {
                result = Outcome{std::nullopt, scale_floor(base.floor, units)};
            }
        } else {
            result = eval_limit(a);
        }
        if (result.exact) {
            facts_.exact.emplace(key, *result.exact);
        } else {
            assert(bound_);
            Nat& low = facts_.exceeds[key];
            if (result.floor > low) low = result.floor;
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    Outcome eval_limit(const TermPtr& a) {
        TermPtr rung = fs_step(a, zero(), meter_);
        for (Nat j = 1; j <= k_; ++j) {
            meter_.tick();
            Outcome h = evalx(rung);
            if (!h.exact) return {std::nullopt, h.floor};
            if (bound_ && *h.exact > *bound_) {
                // The final value is at least this rung's value.
                return {std::nullopt, *h.exact - 1};
            }
            rung = fs_step(a, nat(*h.exact), meter_);
        }
        return evalx(rung);
    }

    // value * k^exponent against the bound. Crossing the bound does not stop
    // the multiplication immediately: a short tail still completes to the
    // exact value, and a long one leaves a grown floor (see kFloorGrowth).
    Outcome mul_pow_capped(const Nat& value, const Nat& exponent) {
        Nat v = value;
        Nat e = 0;
        while (v <= *bound_ && e < exponent) {
            meter_.tick();
            v *= k_;
            e += 1;
        }
        if (v <= *bound_) return {v, 0};
        int extra = 0;
        while (e < exponent && extra < kFloorGrowth) {
            v *= k_;
            e += 1;
            ++extra;
        }
        if (e == exponent) return {v, 0};  // exact, merely above the bound
        return {std::nullopt, v - 1};      // true value is at least v
    }

    // value * k^exponent exactly, under the bit budget.
    Nat mul_pow_exact(const Nat& value, const Nat& exponent) {
        Nat kbits = boost::multiprecision::msb(k_);  // floor(log2 k) >= 1
        if (kbits == 0) kbits = 1;
        meter_.check_bit_count(exponent * kbits);
        Nat v = value;
        Nat e = exponent;
        Nat factor = k_;
        while (e > 0) {
            meter_.tick();
            if ((e & 1) != 0) v *= factor;
            e >>= 1;
            if (e > 0) factor *= factor;
            meter_.check_bits(v);
            meter_.check_bits(factor);
        }
        meter_.check_bits(v);
        return v;
    }

    // A floor for value * k^exponent given that value exceeds floor.
    Nat scale_floor(Nat floor, const Nat& exponent) {
        Nat e = 0;
        while (e < exponent && e < kFloorGrowth) {
            floor *= k_;
            e += 1;
        }
        return floor;
    }

    Nat k_;
    std::optional<Nat> bound_;
    Meter& meter_;
    ValueFacts& facts_;
    std::unordered_map<std::string, Outcome> memo_;
};

void require_countable_notation(const TermPtr& a, const char* op) {
    if (!is_ot0(a) || !term_lt(a, omega1()))
        throw DomainError(std::string(op) +
                          " needs a well-formed countable term, got '" +
                          print_term(a) + "'");
}

}  // namespace

Nat hardy(const TermPtr& a, const Nat& k, const Budget& budget) {
    if (!a) throw DomainError("hardy on null term");
    require_countable_notation(a, "hardy");
    Meter meter(budget);
    HardyEval eval(k, std::nullopt, meter);
    auto v = eval.eval(a);
    assert(v);
    return *v;
}

std::optional<Nat> hardy_leq(const TermPtr& a, const Nat& k, const Nat& bound,
                             Meter& meter) {
    if (!a) throw DomainError("hardy_leq on null term");
    require_countable_notation(a, "hardy_leq");
    HardyEval eval(k, bound, meter);
    return eval.eval(a);
}

TermPtr ladder(const TermPtr& a, const Nat& k, const Nat& b, const Budget& budget) {
    if (!a) throw DomainError("ladder on null term");
    require_countable_notation(a, "ladder");
    Cofinality t = tp(a);
    if (t != Cofinality::Omega)
        throw DomainError("ladder needs a countable limit term");
    Meter meter(budget);
    HardyEval eval(k, std::nullopt, meter);
    TermPtr rung = fs_step(a, zero(), meter);
    for (Nat j = 1; j <= b; ++j) {
        meter.tick();
        auto h = eval.eval(rung);
        assert(h);
        rung = fs_step(a, nat(*h), meter);
    }
    return rung;
}

KNF knf_decompose(const Nat& m, const Nat& k, const Budget& budget) {
    if (k < 2) throw DomainError("base must be at least 2");
    if (m < 0) throw DomainError("value may not be negative");
    if (m < k) {
        KNF nf;
        nf.k = k;
        nf.literal = m;
        return nf;
    }
    Meter meter(budget);
    HardyEval eval(k, m, meter);

    // Every countable well-formed term sits below this seed, and its value
    // is out of reach of any representable m.
    TermPtr cur = psi(0, psi(1, omega2()));
    if (eval.eval(cur))
        throw BudgetError("value beyond the supported decomposition range");

    std::optional<Nat> found;
    while (true) {
        meter.tick();
        if (auto h = eval.eval(cur)) {
            found = h;
            break;
        }
        if (cur->is_successor()) {
            cur = predecessor(cur);
            continue;
        }
        TermPtr first = fs_step(cur, zero(), meter);
        if (!eval.eval(first)) {
            cur = first;
            continue;
        }
        // Largest step point still within m; its successor step restarts
        // the descent. Step values gain at least a factor k per index, so
        // this walk is logarithmic in m.
        Nat x = 0;
        while (true) {
            meter.tick();
            TermPtr next = fs_step(cur, nat(x + 1), meter);
            if (!eval.eval(next)) {
                cur = next;
                break;
            }
            x += 1;
        }
    }

    KNF nf;
    nf.k = k;
    nf.alpha = cur;
    nf.p = m / *found;
    nf.q = m % *found;
    assert(nf.p >= 1 && nf.p < k);
    return nf;
}

Nat knf_oracle_cap() { return 100000; }

KNF knf_oracle(const Nat& m, const Nat& k, const Budget& budget) {
    if (k < 2) throw DomainError("base must be at least 2");
    if (m < 0) throw DomainError("value may not be negative");
    if (m > knf_oracle_cap())
        throw DomainError("oracle only supports values up to " +
                          knf_oracle_cap().str());
    if (m < k) {
        KNF nf;
        nf.k = k;
        nf.literal = m;
        return nf;
    }
    Meter meter(budget);

    // Candidate pool: naturals n (value k^(n+1)) and omega + j (value
    // hardy(omega, k) * k^j). Any term above the pool has a step chain
    // passing through omega * 2 or through the first non-additive limit
    // above omega; values are monotone along those chains, so checking that
    // both gates exceed m proves the pool complete for this m.
    TermPtr best;
    Nat best_value = 0;

    Nat n = 0;
    Nat value = k * k;  // hardy(nat(0), k) = k <= m already known
    best = zero();
    best_value = k;
    while (value <= m) {
        meter.tick();
        n += 1;
        best = nat(n);
        best_value = value;
        value *= k;
    }

    if (auto hw = hardy_leq(omega(), k, m, meter)) {
        TermPtr omega_twice = mul_nat(omega(), 2);
        if (hardy_leq(omega_twice, k, m, meter))
            throw DomainError("oracle pool gate failed: omega * 2 fits under m");
        if (hardy_leq(psi(0, one()), k, m, meter))
            throw DomainError("oracle pool gate failed: p0(1) fits under m");
        Nat j = 0;
        Nat v = *hw;
        while (v * k <= m) {
            meter.tick();
            j += 1;
            v *= k;
        }
        best = add(omega(), nat(j));
        best_value = v;
    }

    KNF nf;
    nf.k = k;
    nf.alpha = best;
    nf.p = m / best_value;
    nf.q = m % best_value;
    if (nf.p >= k)
        throw DomainError("oracle decomposition failed: p >= k");
    return nf;
}

Nat knf_value(const KNF& nf, const Budget& budget) {
    if (nf.literal) {
        if (*nf.literal >= nf.k)
            throw DomainError("literal normal form must be below the base");
        return *nf.literal;
    }
    if (!nf.alpha) throw DomainError("normal form without a term");
    if (nf.p < 1 || nf.p >= nf.k)
        throw DomainError("normal form multiplier out of range");
    Nat h = hardy(nf.alpha, nf.k, budget);
    if (nf.q >= h)
        throw DomainError("normal form remainder out of range");
    Meter meter(budget);
    Nat v = h * nf.p + nf.q;
    meter.check_bits(v);
    return v;
}

bool knf_eq(const KNF& a, const KNF& b) {
    if (a.k != b.k) return false;
    if (a.literal.has_value() != b.literal.has_value()) return false;
    if (a.literal) return *a.literal == *b.literal;
    return term_eq(a.alpha, b.alpha) && a.p == b.p && a.q == b.q;
}

std::string print_knf(const KNF& nf) {
    std::ostringstream out;
    if (nf.literal) {
        out << "literal " << *nf.literal << " (base " << nf.k << ")";
    } else {
        out << "H[" << print_term(nf.alpha) << "](" << nf.k << ")*" << nf.p
            << "+" << nf.q;
    }
    return out.str();
}

}  // namespace ordcalc
