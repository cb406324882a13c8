#ifndef ORDCALC_FUNDAMENTAL_HPP
#define ORDCALC_FUNDAMENTAL_HPP

#include <string>
#include <vector>

#include "ordcalc/term.hpp"

namespace ordcalc {

// Limit type of a term: zero, successor, countable limit, or a limit of
// uncountable cofinality at level 1 or 2.
enum class Cofinality { Zero, One, Omega, OmegaUnc1, OmegaUnc2 };

std::string cofinality_name(Cofinality c);

// 0 for Omega, 1 for OmegaUnc1, 2 for OmegaUnc2. DomainError on Zero/One.
int cofinality_level(Cofinality c);

Cofinality tp(const TermPtr& a);

// One assignment step a[x].
//   tp(a) = Zero:      a[x] = 0 for natural x (out-of-band convention).
//   tp(a) = One:       a[x] = a - 1 for every term x.
//   tp(a) = Omega:     x must be a natural number.
//   tp(a) = OmegaUnc i: x must be a term below psi_i(0).
// Collapses pass the index through transparently when their argument's
// cofinality does not exceed their level; one level up they iterate the
// collapse of the argument's own steps; successor arguments turn into
// finite multiples.
TermPtr fs_step(const TermPtr& a, const TermPtr& x, Meter& meter);

struct DescentResult {
    std::vector<TermPtr> points;  // includes the starting term
    bool reached_zero = false;
};

// Iterates a[start], (a[start])[start+1], ... for `count` steps or until 0.
DescentResult iter_descent(const TermPtr& a, const Nat& start, const Nat& count,
                           Meter& meter);

// Whether a is reachable from b by repeatedly taking the k-th step.
// a == b counts as reachable in zero steps.
bool step_le(const TermPtr& a, const TermPtr& b, const Nat& k, Meter& meter);

// Whether a == b[x] for some x < n.
bool single_step_lt_n(const TermPtr& a, const TermPtr& b, const Nat& n, Meter& meter);

// The squeeze property of steps: whenever a[x] < b < a, also a[x] <= b[1]
// and norm(a[x]) < norm(b). Returns true when the property holds for this
// triple (vacuously when the precondition fails).
bool check_bachmann(const TermPtr& a, const TermPtr& b, const TermPtr& x, Meter& meter);

// For a sequence xi_0, xi_1, ... with xi_n[n+1] <= xi_{n+1} <= xi_n
// (DomainError on the first index violating that sandwich), checks that
// every xi_n dominates the diagonal descent xi_0[0][1]...[n].
bool verify_majorize(const std::vector<TermPtr>& seq, Meter& meter);

// Fast-growing evaluation: 0 maps to n+1, successors iterate the
// predecessor's function n times on n, limits step to a[n] first.
Nat fgh_eval(const TermPtr& a, const Nat& n, Meter& meter);

}  // namespace ordcalc

#endif
