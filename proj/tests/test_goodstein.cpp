#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "ordcalc/goodstein.hpp"
#include "ordcalc/term.hpp"

using namespace ordcalc;

namespace {

const Budget kRoomy{50'000'000, 1u << 20};

TermPtr P(const std::string& s) { return parse_term(s); }

std::vector<Nat> values_of(const RunResult& r) {
    std::vector<Nat> out;
    for (const auto& e : r.entries) out.push_back(e.value);
    return out;
}

std::vector<std::string> ordinals_of(const RunResult& r) {
    std::vector<std::string> out;
    for (const auto& e : r.entries) out.push_back(print_term(e.ordinal));
    return out;
}

}  // namespace

TEST_CASE("single steps") {
    CHECK(goodstein_step(0, 7, kRoomy) == 0);
    CHECK(goodstein_step(3, 0, kRoomy) == 3);
    CHECK(goodstein_step(2, 1, kRoomy) == 1);
    CHECK(goodstein_step(4, 0, kRoomy) == 8);
    CHECK_THROWS_AS(goodstein_step(Nat(-1), 0, kRoomy), DomainError);
    CHECK_THROWS_AS(goodstein_step(1, Nat(-1), kRoomy), DomainError);
}

TEST_CASE("full runs of small seeds") {
    RunResult r0 = goodstein_run(0, 100, kRoomy);
    CHECK(r0.terminated);
    REQUIRE(r0.entries.size() == 1);
    CHECK(*r0.final_k == 0);
    CHECK(r0.entries[0].base == 2);

    RunResult r1 = goodstein_run(1, 100, kRoomy);
    CHECK(r1.terminated);
    CHECK(*r1.final_k == 1);
    CHECK(values_of(r1) == std::vector<Nat>{1, 0});

    RunResult r2 = goodstein_run(2, 100, kRoomy);
    CHECK(r2.terminated);
    CHECK(*r2.final_k == 3);
    CHECK(values_of(r2) == std::vector<Nat>{2, 2, 1, 0});
    CHECK(ordinals_of(r2) == std::vector<std::string>{"w", "2", "1", "0"});

    RunResult r3 = goodstein_run(3, 100, kRoomy);
    CHECK(r3.terminated);
    CHECK(*r3.final_k == 5);
    CHECK(values_of(r3) == std::vector<Nat>{3, 3, 3, 2, 1, 0});
    CHECK(ordinals_of(r3) ==
          std::vector<std::string>{"w+1", "w", "3", "2", "1", "0"});
    REQUIRE(!r3.entries[0].knf.literal.has_value());
    CHECK(term_eq(r3.entries[0].knf.alpha, zero()));
    CHECK(r3.entries[0].knf.p == 1);
    CHECK(r3.entries[0].knf.q == 1);
    for (std::size_t i = 0; i < r3.entries.size(); ++i) {
        CHECK(r3.entries[i].k == i);
        CHECK(r3.entries[i].base == i + 2);
    }

    RunResult r4 = goodstein_run(4, 100, kRoomy);
    CHECK(r4.terminated);
    CHECK(*r4.final_k == 21);
    REQUIRE(r4.entries.size() == 22);
    CHECK(r4.entries[0].value == 4);
    CHECK(r4.entries[1].value == 8);
    CHECK(r4.entries[2].value == 9);
    CHECK(r4.entries[3].value == 10);
    CHECK(r4.entries[4].value == 11);
    CHECK(r4.entries[21].value == 0);

    CHECK(verify_descent(r0, kRoomy));
    CHECK(verify_descent(r1, kRoomy));
    CHECK(verify_descent(r2, kRoomy));
    CHECK(verify_descent(r3, kRoomy));
    CHECK(verify_descent(r4, kRoomy));
}

TEST_CASE("truncated, interrupted and starved runs") {
    RunResult part = goodstein_run(3, 2, kRoomy);
    CHECK_FALSE(part.terminated);
    CHECK_FALSE(part.final_k.has_value());
    CHECK(values_of(part) == std::vector<Nat>{3, 3, 3});
    CHECK(verify_descent(part, kRoomy));

    RunResult stopped = goodstein_run(4, 100, kRoomy, []() { return true; });
    CHECK(stopped.interrupted);
    CHECK_FALSE(stopped.terminated);
    CHECK(stopped.note == "interrupted");
    CHECK(stopped.entries.size() == 1);

    RunResult starved = goodstein_run(4, 100, Budget{5, 1u << 20});
    CHECK(starved.budget_exhausted);
    CHECK_FALSE(starved.terminated);
    CHECK_FALSE(starved.note.empty());
}

TEST_CASE("descent checking rejects doctored ordinals") {
    RunResult r = goodstein_run(3, 100, kRoomy);
    REQUIRE(verify_descent(r, kRoomy));

    RunResult up = r;
    up.entries[1].ordinal = P("w+2");
    CHECK_FALSE(verify_descent(up, kRoomy));

    RunResult flat = r;
    flat.entries[1].ordinal = flat.entries[0].ordinal;
    CHECK_FALSE(verify_descent(flat, kRoomy));

    RunResult rushed = r;
    rushed.entries[1].ordinal = P("1");
    CHECK_FALSE(verify_descent(rushed, kRoomy));

    RunResult null_ord = r;
    null_ord.entries[1].ordinal = nullptr;
    CHECK_FALSE(verify_descent(null_ord, kRoomy));
}

TEST_CASE("iterated evaluation tower") {
    CHECK(ell_tower(0, kRoomy) == 0);
    CHECK(ell_tower(1, kRoomy) == 2);
    CHECK(ell_tower(2, kRoomy) == 8);
    CHECK(ell_tower(3, kRoomy) == 512);
    CHECK(ell_tower(4, kRoomy) == Nat(1) << 513);
    CHECK_THROWS_AS(ell_tower(5, kRoomy), BudgetError);
    CHECK_THROWS_AS(ell_tower(Nat(-1), kRoomy), DomainError);
}

TEST_CASE("traces round-trip and rebuild termination data") {
    RunResult r = goodstein_run(3, 100, kRoomy);
    std::ostringstream first;
    write_trace(r, first);
    CHECK(!first.str().empty());

    std::istringstream in(first.str());
    RunResult back = read_trace(in);
    REQUIRE(back.entries.size() == r.entries.size());
    CHECK(back.terminated);
    CHECK(*back.final_k == 5);
    for (std::size_t i = 0; i < r.entries.size(); ++i) {
        CHECK(back.entries[i].k == r.entries[i].k);
        CHECK(back.entries[i].base == r.entries[i].base);
        CHECK(back.entries[i].value == r.entries[i].value);
        CHECK(term_eq(back.entries[i].ordinal, r.entries[i].ordinal));
        CHECK(knf_eq(back.entries[i].knf, r.entries[i].knf));
    }

    std::ostringstream second;
    write_trace(back, second);
    CHECK(first.str() == second.str());
}

TEST_CASE("identical seeds give identical traces") {
    std::ostringstream a, b;
    write_trace(goodstein_run(4, 100, kRoomy), a);
    write_trace(goodstein_run(4, 100, kRoomy), b);
    CHECK(!a.str().empty());
    CHECK(a.str() == b.str());
}

TEST_CASE("oversized values are recorded lossily and refused on read") {
    CHECK(trace_digit_threshold() == 256);

    Nat big = 1;
    for (int i = 0; i < 300; ++i) big *= 10;
    RunResult r;
    TraceEntry e;
    e.k = 0;
    e.base = 2;
    e.value = big;
    e.knf.k = 2;
    e.knf.literal = big;
    e.ordinal = zero();
    r.entries.push_back(e);

    std::ostringstream out;
    write_trace(r, out);
    CHECK(out.str().find("\"digits\":301") != std::string::npos);
    const std::string prefix = "\"prefix\":\"1" + std::string(31, '0') + "\"";
    CHECK(out.str().find(prefix) != std::string::npos);

    std::istringstream in(out.str());
    CHECK_THROWS_AS(read_trace(in), DomainError);
}

TEST_CASE("malformed traces are refused") {
    std::istringstream bad_json("{not json");
    CHECK_THROWS_AS(read_trace(bad_json), ParseError);

    std::istringstream missing(R"({"k":"0","base":"2","value":"1"})");
    CHECK_THROWS_AS(read_trace(missing), ParseError);

    std::istringstream bad_nat(
        R"({"k":"0","base":"2","value":"x1","knf":{"literal":"1"},"ordinal":"0"})");
    CHECK_THROWS_AS(read_trace(bad_nat), ParseError);

    std::istringstream empty("");
    RunResult r = read_trace(empty);
    CHECK(r.entries.empty());
    CHECK_FALSE(r.terminated);
}
