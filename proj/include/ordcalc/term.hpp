#ifndef ORDCALC_TERM_HPP
#define ORDCALC_TERM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/budget.hpp"

namespace ordcalc {

enum class Ordering { Less, Equal, Greater };
enum class Cofinality;

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Level tag for the unit summand "1" inside a Part. Collapse levels are
// 0, 1, 2; the unit sorts below all of them.
inline constexpr int kUnitLevel = -1;

// One summand group of a term in canonical form: `count` copies of a
// principal, which is either the unit 1 (level == kUnitLevel, arg null)
// or psi_level(arg).
struct Part {
    int level = kUnitLevel;
    TermPtr arg;
    Nat count = 1;
};

// An ordinal notation. Zero is the empty sum; every other term is a sum of
// principal parts in strictly decreasing order, equal principals merged into
// one Part with count > 1. Terms are immutable and shared.
class Term {
public:
    const std::vector<Part>& parts() const { return parts_; }

    bool is_zero() const { return parts_.empty(); }
    bool is_natural() const;    // 0, or a single unit part
    bool is_successor() const;  // nonzero with trailing unit part
    bool is_principal() const;  // exactly one part with count 1

    // The numeric value when is_natural(), otherwise nullopt.
    std::optional<Nat> as_natural() const;

private:
    explicit Term(std::vector<Part> parts) : parts_(std::move(parts)) {}
    std::vector<Part> parts_;
    // Lazily filled by tp(); terms are immutable, so the classification of a
    // node never changes once computed. Single-threaded use assumed.
    mutable signed char tp_cache_ = -1;

    friend TermPtr term_from_parts(std::vector<Part> parts);
    friend Cofinality tp(const TermPtr& a);
};

// -- construction ------------------------------------------------------

TermPtr zero();
TermPtr one();
TermPtr nat(const Nat& n);
TermPtr psi(int level, const TermPtr& arg);  // level in {0, 1, 2}
TermPtr omega();   // psi0(0), printed "w"
TermPtr omega1();  // psi1(0), printed "Om"
TermPtr omega2();  // psi2(0), printed "Om2"

// Builds a term from explicit parts, merging adjacent equal principals and
// rejecting any order violation with a DomainError. Counts must be positive.
TermPtr term_from_parts(std::vector<Part> parts);

// -- comparison --------------------------------------------------------

// Total order on arbitrary terms (not just well-formed notations):
// 0 is least, 1 is below every psi, psi levels are strictly stacked,
// equal levels compare by argument, sums compare entrywise with the
// longer sum winning on a tie. Trichotomous and transitive.
Ordering compare(const TermPtr& a, const TermPtr& b);
Ordering compare_principal(const Part& a, const Part& b);  // ignores count

bool term_eq(const TermPtr& a, const TermPtr& b);
bool term_lt(const TermPtr& a, const TermPtr& b);
bool term_le(const TermPtr& a, const TermPtr& b);

// -- arithmetic and measures -------------------------------------------

// Sum with absorption: trailing parts of `a` strictly below the leading
// principal of `b` are dropped, equal principals merge.
TermPtr add(const TermPtr& a, const TermPtr& b);

// n copies of a principal term (or of 0, or of 1). Rejects proper sums.
TermPtr mul_nat(const TermPtr& a, const Nat& n);

// Structural size: unit counts and one per psi node, counts weighted.
Nat norm(const TermPtr& a);

// Largest natural number appearing as a trailing-sum leaf anywhere inside
// the term, returned as a (natural) term. Repetition counts of psi parts
// do not contribute.
TermPtr max_coefficient(const TermPtr& a);

// Predecessor of a successor term. DomainError otherwise.
TermPtr predecessor(const TermPtr& a);

// -- text form ---------------------------------------------------------
//
//   term      := "0" | sum
//   sum       := item ("+" item)*
//   item      := principal ("*" nat)? | nat
//   principal := "1" | "p0(" term ")" | "p1(" term ")" | "p2(" term ")"
//              | "w" | "Om" | "Om2"
//
// The printer always emits the sugar (w, Om, Om2, decimal naturals) and
// parse(print(t)) == t exactly. Non-canonical part order is rejected.

TermPtr parse_term(const std::string& text);
std::string print_term(const TermPtr& a);
std::string print_part(const Part& p);

// All canonical terms with norm <= norm_bound, ascending. With `below`
// non-null only terms strictly below it are kept. The bound is capped to
// keep the result set enumerable; beyond the cap a DomainError is raised.
std::vector<TermPtr> enumerate_terms(unsigned norm_bound, const TermPtr& below,
                                     const Budget& budget);

unsigned enumerate_norm_cap();

}  // namespace ordcalc

#endif
