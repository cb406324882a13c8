#ifndef ORDCALC_ASSIGN_HPP
#define ORDCALC_ASSIGN_HPP

#include "ordcalc/gap.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

// The ordinal a natural number denotes one collapse level up, read off its
// base-k normal form: values below k stay themselves, k becomes psi0(0),
// and hardy(alpha, k) * p + q becomes psi0(assign_ord(alpha)) * p +
// assign_nat(q). Strictly monotone in m and invariant under base change.
TermPtr assign_nat(const Nat& m, const Nat& k, const Budget& budget);

// The same lift on countable notations: psi0 arguments move to psi1, psi1
// arguments to psi2, sums map pointwise, and natural leaves >= k are first
// decomposed in base k.
TermPtr assign_ord(const TermPtr& a, const Nat& k, const Budget& budget);

// Pointwise lift of a context: filled positions map via assign_ord /
// assign_nat, collapses on the hole path move one level up, the hole
// stays in place.
ContextPtr assign_context(const ContextPtr& c, const Nat& k, const Budget& budget);

}  // namespace ordcalc

#endif
