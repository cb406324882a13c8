#ifndef ORDCALC_HARDY_HPP
#define ORDCALC_HARDY_HPP

#include <optional>

#include "ordcalc/term.hpp"

namespace ordcalc {

// Multiplicative Hardy evaluation at base k >= 2:
//   value(0) = k, value(a + 1) = value(a) * k,
//   limits evaluate at the k-th ladder rung.
// Exact; raises BudgetError when the value would not fit the size budget.
Nat hardy(const TermPtr& a, const Nat& k, const Budget& budget);

// Same evaluation, but capped: returns the exact value when it is <= bound
// and nullopt as soon as the result provably exceeds the bound. This is what
// lets decomposition probe astronomically large values cheaply.
std::optional<Nat> hardy_leq(const TermPtr& a, const Nat& k, const Nat& bound,
                             Meter& meter);

// The b-th ladder rung of a limit term: rung 0 is a[0], rung j+1 is
// a[hardy(rung j, k)]. hardy(limit a, k) = hardy(rung k, k).
TermPtr ladder(const TermPtr& a, const Nat& k, const Nat& b, const Budget& budget);

// Base-k normal form of a natural number m:
//   m < k:  kept literal;
//   m >= k: m = hardy(alpha, k) * p + q with alpha the largest countable
//           well-formed term whose value fits under m, 0 < p < k, and
//           q < hardy(alpha, k).
struct KNF {
    Nat k = 2;
    std::optional<Nat> literal;  // engaged exactly when m < k
    TermPtr alpha;
    Nat p = 0;
    Nat q = 0;
};

// Finds the normal form by greedy descent through step points, starting at
// a term provably above every countable candidate.
KNF knf_decompose(const Nat& m, const Nat& k, const Budget& budget);

// Independent reference decomposition over an explicit candidate pool
// (naturals and omega + j). The pool's completeness is re-verified at
// runtime for the given m and k; if m is too large for the pool to cover,
// this refuses with a DomainError rather than guessing. Capped at
// knf_oracle_cap().
KNF knf_oracle(const Nat& m, const Nat& k, const Budget& budget);

Nat knf_oracle_cap();

// Reassembles the number a normal form denotes.
Nat knf_value(const KNF& nf, const Budget& budget);

bool knf_eq(const KNF& a, const KNF& b);
std::string print_knf(const KNF& nf);

}  // namespace ordcalc

#endif
