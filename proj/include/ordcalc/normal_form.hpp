#ifndef ORDCALC_NORMAL_FORM_HPP
#define ORDCALC_NORMAL_FORM_HPP

#include <vector>

#include "ordcalc/term.hpp"

namespace ordcalc {

// Arguments guarding level-0 collapses: every beta with a psi0(beta)
// occurring in the term, gathered hereditarily. Sorted ascending, no
// duplicates.
std::vector<TermPtr> g0(const TermPtr& a);

// Same for level-1 collapses: every beta with psi1(beta) occurring in the
// term. Subterms below psi0 never contribute (they sit below the first
// uncountable and are invisible at level 1).
std::vector<TermPtr> g1(const TermPtr& a);

// Membership in the well-formed notation system: each collapse argument
// must dominate the guarded arguments gathered at its own level, and
// level-0 collapse arguments must stay below psi2(0).
bool is_ot(const TermPtr& a);

// The countable fragment the numeric machinery lives in: well-formed,
// below psi1(psi2(0)), and all level-0 guard sets below that bound too.
bool is_ot0(const TermPtr& a);

// psi1(psi2(0)), the exclusive upper bound of the countable fragment.
TermPtr ot0_bound();

}  // namespace ordcalc

#endif
