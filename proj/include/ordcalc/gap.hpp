#ifndef ORDCALC_GAP_HPP
#define ORDCALC_GAP_HPP

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "ordcalc/term.hpp"

namespace ordcalc {

struct Context;
using ContextPtr = std::shared_ptr<const Context>;

// A term with exactly one hole. The hole slot sits between pre and post,
// either directly in the sum or wrapped in a collapse whose argument is
// again a context. Contexts are produced by gap classification; they are
// not part of the user-facing term syntax.
struct Context {
    std::vector<Part> pre;
    int psi_level = -1;  // -1: hole sits directly in this sum
    ContextPtr inner;    // engaged iff psi_level >= 0
    std::vector<Part> post;
};

ContextPtr hole_context();
ContextPtr make_context(std::vector<Part> pre, int psi_level, ContextPtr inner,
                        std::vector<Part> post);

// Fills the hole. The result must be canonical; a filler that breaks the
// part ordering raises DomainError. Equal neighbors merge as usual.
TermPtr substitute(const ContextPtr& c, const TermPtr& filler);

// Drops every post list along the hole path.
ContextPtr truncate_context(const ContextPtr& c);

// True when no collapse on the hole path is a level-0 collapse.
bool is_psi0_nesting_free(const ContextPtr& c);

std::string print_context(const ContextPtr& c);

// How a sits inside the gap below b (for a < b):
//   Successor         b = a + 1
//   BelowFirst        a < b[1]
//   NatHole           a = lambda[t],              b = lambda-trunc[omega]
//   OmegaLimit        a = lambda[gamma],          b = lambda-trunc[psi0(B)]
//                     with B of uncountable cofinality and b[t] <= a < b[t+1]
//   PsiMultiple       a = lambda[psi_i(gamma)*s], b = lambda-trunc[psi_i(gamma+1)]
//   OmegaUncountable  a = lambda[gamma],          b = lambda-trunc[Om]
//                     with b[tau] <= a < b[tau+1]
struct GapSuccessor {
    TermPtr pred;
};
struct GapBelowFirst {};
struct GapNatHole {
    ContextPtr lambda;
    Nat t;
};
struct GapOmegaLimit {
    ContextPtr lambda;
    TermPtr gamma;
    Nat t;
};
struct GapPsiMultiple {
    ContextPtr lambda;
    int level = 0;
    TermPtr gamma;
    Nat s;
};
struct GapOmegaUncountable {
    ContextPtr lambda;
    TermPtr gamma;
    TermPtr tau;
};

using GapCase = std::variant<GapSuccessor, GapBelowFirst, GapNatHole, GapOmegaLimit,
                             GapPsiMultiple, GapOmegaUncountable>;

// Locates the first structural divergence between a and b and produces the
// matching case with verifiable witnesses. Requires a < b and both terms
// well-formed.
GapCase classify_gap(const TermPtr& a, const TermPtr& b, Meter& meter);

// Re-checks a case against the pair it was produced for, using only
// substitution, comparison and steps. Never throws; mismatches yield false.
bool verify_gap(const TermPtr& a, const TermPtr& b, const GapCase& gc, Meter& meter);

std::string gap_case_name(const GapCase& gc);
std::string print_gap(const GapCase& gc);

}  // namespace ordcalc

#endif
