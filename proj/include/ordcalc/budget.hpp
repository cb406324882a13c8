#ifndef ORDCALC_BUDGET_HPP
#define ORDCALC_BUDGET_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordcalc {

// Exact nonnegative integers. All numeric values in the library are exact;
// nothing is ever rounded or approximated.
using Nat = boost::multiprecision::cpp_int;

// Input outside an operation's domain (ill-formed term, base < 2, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Computation exceeded its step or size budget. Deliberately distinct from
// DomainError: the result exists mathematically, we just refuse to build it.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed term text; carries the byte offset of the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

struct Budget {
    std::uint64_t max_steps = 1'000'000;
    std::uint64_t max_bits = 1u << 20;
};

// Tracks work done against a Budget. Every potentially unbounded loop and
// recursion in the library ticks a Meter, and every big numeric value that
// gets materialized passes through check_bits.
class Meter {
public:
    explicit Meter(const Budget& budget) : budget_(budget) {
        if (budget.max_steps == 0 || budget.max_bits == 0)
            throw DomainError("budget limits must be positive");
    }

    void tick(std::uint64_t n = 1) {
        steps_ += n;
        if (steps_ > budget_.max_steps)
            throw BudgetError("step budget exhausted (" +
                              std::to_string(budget_.max_steps) + " steps)");
    }

    void check_bits(const Nat& value) {
        if (value > 0 && boost::multiprecision::msb(value) + 1 > budget_.max_bits)
            throw BudgetError("size budget exhausted (value needs more than " +
                              std::to_string(budget_.max_bits) + " bits)");
    }

    // For callers that want to pre-flight a value of roughly `bits` bits
    // without constructing it first.
    void check_bit_count(const Nat& bits) {
        if (bits > budget_.max_bits)
            throw BudgetError("size budget exhausted (value needs more than " +
                              std::to_string(budget_.max_bits) + " bits)");
    }

    const Budget& budget() const { return budget_; }
    std::uint64_t steps_used() const { return steps_; }

private:
    Budget budget_;
    std::uint64_t steps_ = 0;
};

}  // namespace ordcalc

#endif
