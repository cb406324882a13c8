#ifndef ORDCALC_GOODSTEIN_HPP
#define ORDCALC_GOODSTEIN_HPP

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ordcalc/hardy.hpp"
#include "ordcalc/term.hpp"

namespace ordcalc {

// One recorded state of the process: at step k the value lives in base
// k + 2, carries its normal form there, and the ordinal assigned at that
// base.
struct TraceEntry {
    Nat k;
    Nat base;
    Nat value;
    KNF knf;
    TermPtr ordinal;
};

struct RunResult {
    std::vector<TraceEntry> entries;
    bool terminated = false;
    std::optional<Nat> final_k;
    bool budget_exhausted = false;
    bool interrupted = false;
    std::string note;
};

// One step: zero stays zero, anything else is rewritten from base k + 2 to
// base k + 3 and decremented.
Nat goodstein_step(const Nat& value, const Nat& k, const Budget& budget);

// Iterates goodstein_step from the start value, recording one TraceEntry
// per step, until the value reaches zero, max_steps steps have been taken,
// the budget runs out (partial trace, budget_exhausted set), or
// stop_requested returns true between steps (partial trace, interrupted
// set).
RunResult goodstein_run(const Nat& ell, const Nat& max_steps, const Budget& budget,
                        const std::function<bool()>& stop_requested = {});

// Checks the recorded ordinals: for every consecutive pair whose first
// value is positive, the ordinal strictly decreases and stays at or above
// the step of its predecessor taken at that entry's base. Mismatched or
// ill-formed ordinals yield false; budget exhaustion still raises.
bool verify_descent(const RunResult& r, const Budget& budget);

// l_0 = 0, l_{n+1} = hardy(l_n, 2). Grows past any budget at n = 5.
Nat ell_tower(const Nat& n, const Budget& budget);

// Line-delimited trace records: keys k, base, value, knf, ordinal. Values
// print as decimal strings up to trace_digit_threshold() digits and as
// {digits, prefix} beyond it (no longer recoverable, by design).
void write_trace(const RunResult& r, std::ostream& out);

// Rebuilds a RunResult from trace lines. Rejects records whose values were
// written in the lossy form.
RunResult read_trace(std::istream& in);

std::size_t trace_digit_threshold();

}  // namespace ordcalc

#endif
