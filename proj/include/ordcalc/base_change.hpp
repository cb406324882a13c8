#ifndef ORDCALC_BASE_CHANGE_HPP
#define ORDCALC_BASE_CHANGE_HPP

#include "ordcalc/gap.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

// Rewrites m from base k to base k+1: values below k are fixed, and a
// decomposed value hardy(alpha, k) * p + q becomes
// hardy(bc_ord(alpha), k+1) * p + bc_nat(q). Multiplicities are preserved
// verbatim; only the hierarchy base moves. Strictly monotone and
// inflationary in m.
Nat bc_nat(const Nat& m, const Nat& k, const Budget& budget);

// The same rewrite on notations: zero is fixed, collapses are pushed into
// their arguments, sums map pointwise, and natural leaves go through
// bc_nat. Part multiplicities never change.
TermPtr bc_ord(const TermPtr& a, const Nat& k, const Budget& budget);

// Pointwise rewrite of every filled position of a context; the hole stays
// where it is.
ContextPtr bc_context(const ContextPtr& c, const Nat& k, const Budget& budget);

}  // namespace ordcalc

#endif
