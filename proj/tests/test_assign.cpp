#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "ordcalc/assign.hpp"
#include "ordcalc/base_change.hpp"
#include "ordcalc/fundamental.hpp"
#include "ordcalc/gap.hpp"
#include "ordcalc/normal_form.hpp"
#include "ordcalc/term.hpp"

using namespace ordcalc;

namespace {

const Budget kRoomy{50'000'000, 1u << 20};

TermPtr P(const std::string& s) { return parse_term(s); }
std::string S(const TermPtr& t) { return print_term(t); }

Part unit(const Nat& c) { return Part{kUnitLevel, nullptr, c}; }
Part pt(int lvl, const std::string& arg, const Nat& c = 1) {
    return Part{lvl, P(arg), c};
}

std::string AN(const Nat& m, const Nat& k) {
    return S(assign_nat(m, k, kRoomy));
}

TermPtr max_guard(const std::vector<TermPtr>& gs) {
    TermPtr best = zero();
    for (const auto& g : gs)
        if (term_lt(best, g)) best = g;
    return best;
}

}  // namespace

TEST_CASE("ordinals denoted by naturals") {
    CHECK(AN(0, 2) == "0");
    CHECK(AN(1, 2) == "1");
    CHECK(AN(2, 2) == "w");
    CHECK(AN(3, 2) == "w+1");
    CHECK(AN(4, 2) == "p0(1)");
    CHECK(AN(5, 2) == "p0(1)+1");
    CHECK(AN(3, 3) == "w");
    CHECK(AN(2, 3) == "2");
    CHECK(AN(512, 2) == "p0(Om)");
    CHECK(AN(600, 2) == "p0(Om)+p0(p0(1)+1)+p0(w+1)+p0(w)");

    CHECK_THROWS_AS(assign_nat(Nat(-1), 2, kRoomy), DomainError);
    CHECK_THROWS_AS(assign_nat(5, 1, kRoomy), DomainError);
}

TEST_CASE("lifting notations one level") {
    CHECK(term_eq(assign_ord(zero(), 2, kRoomy), zero()));
    CHECK(S(assign_ord(P("1"), 2, kRoomy)) == "1");
    CHECK(S(assign_ord(P("3"), 2, kRoomy)) == "w+1");
    CHECK(S(assign_ord(P("w"), 2, kRoomy)) == "Om");
    CHECK(S(assign_ord(P("p0(p0(p0(1)))"), 2, kRoomy)) == "p1(p1(p1(1)))");
    CHECK(S(assign_ord(P("w*3+2"), 2, kRoomy)) == "Om*3+w");
    CHECK(S(assign_ord(P("p0(1)*5"), 2, kRoomy)) == "p1(1)*5");
    CHECK(S(assign_ord(P("p0(w)+3"), 2, kRoomy)) == "p1(Om)+w+1");
    CHECK(S(assign_ord(P("p0(p1(w))"), 2, kRoomy)) == "p1(p2(Om))");

    CHECK_THROWS_AS(assign_ord(nullptr, 2, kRoomy), DomainError);
    CHECK_THROWS_AS(assign_ord(P("w"), 1, kRoomy), DomainError);
    CHECK_THROWS_AS(assign_ord(P("Om"), 2, kRoomy), DomainError);
    CHECK_THROWS_AS(assign_ord(P("p1(w)"), 2, kRoomy), DomainError);
    CHECK_THROWS_AS(assign_ord(P("p0(p0(Om))"), 2, kRoomy), DomainError);
}

TEST_CASE("lifting contexts one level") {
    auto c1 = make_context({}, -1, nullptr, {unit(2)});
    CHECK(print_context(assign_context(c1, 2, kRoomy)) == "[]+w");
    CHECK(print_context(assign_context(c1, 3, kRoomy)) == "[]+2");

    auto c2 = make_context({}, 0, hole_context(), {});
    CHECK(print_context(assign_context(c2, 2, kRoomy)) == "p1([])");

    auto c3 = make_context({}, 0, make_context({}, 1, hole_context(), {}), {});
    CHECK(print_context(assign_context(c3, 2, kRoomy)) == "p1(p2([]))");

    auto c4 = make_context({pt(0, "2")}, -1, nullptr, {unit(3)});
    CHECK(print_context(assign_context(c4, 2, kRoomy)) == "p1(w)+[]+w+1");

    auto bad1 = make_context({}, 2, hole_context(), {});
    CHECK_THROWS_AS(assign_context(bad1, 2, kRoomy), DomainError);
    auto bad2 = make_context({pt(2, "0")}, -1, nullptr, {});
    CHECK_THROWS_AS(assign_context(bad2, 2, kRoomy), DomainError);
    CHECK_THROWS_AS(assign_context(nullptr, 2, kRoomy), DomainError);
}

TEST_CASE("base change leaves assigned ordinals fixed") {
    for (Nat m = 0; m <= 500; ++m) {
        TermPtr lhs = assign_nat(bc_nat(m, 2, kRoomy), 3, kRoomy);
        TermPtr rhs = assign_nat(m, 2, kRoomy);
        CAPTURE((int)m.convert_to<long>());
        CHECK(term_eq(lhs, rhs));
    }
    for (Nat m = 0; m <= 300; ++m) {
        TermPtr lhs = assign_nat(bc_nat(m, 3, kRoomy), 4, kRoomy);
        TermPtr rhs = assign_nat(m, 3, kRoomy);
        CAPTURE((int)m.convert_to<long>());
        CHECK(term_eq(lhs, rhs));
    }
}

TEST_CASE("strictly monotone and always well-formed") {
    for (unsigned ki = 2; ki <= 3; ++ki) {
        Nat k = ki;
        TermPtr prev;
        for (Nat m = 0; m <= 600; ++m) {
            TermPtr v = assign_nat(m, k, kRoomy);
            CAPTURE(ki);
            CAPTURE((int)m.convert_to<long>());
            CHECK(is_ot0(v));
            CHECK(term_lt(v, omega1()));
            if (prev) CHECK(term_lt(prev, v));
            prev = v;
        }
    }
}

TEST_CASE("guard sets transfer one level up") {
    auto ts = enumerate_terms(3, omega1(), Budget{});
    std::vector<TermPtr> pool;
    for (const auto& t : ts)
        if (is_ot0(t)) pool.push_back(t);
    REQUIRE(pool.size() > 25);
    for (const auto& a : pool)
        for (const auto& b : pool) {
            bool guarded = true;
            for (const auto& g : g0(a))
                if (!term_lt(g, b)) guarded = false;
            if (!guarded) continue;
            TermPtr a2 = assign_ord(a, 2, kRoomy);
            TermPtr b2 = assign_ord(b, 2, kRoomy);
            CAPTURE(S(a));
            CAPTURE(S(b));
            CHECK(is_ot(a2));
            for (const auto& g : g1(a2)) CHECK(term_lt(g, b2));
        }
}

TEST_CASE("largest coefficient controls the largest level-0 guard") {
    auto ts = enumerate_terms(4, omega1(), Budget{});
    std::vector<TermPtr> pool;
    for (const auto& t : ts)
        if (is_ot0(t)) pool.push_back(t);
    REQUIRE(pool.size() == 115);
    for (unsigned ki = 2; ki <= 3; ++ki) {
        Nat k = ki;
        for (const auto& a : pool) {
            auto mc = max_coefficient(a)->as_natural();
            REQUIRE(mc.has_value());
            if (*mc < 1) continue;
            TermPtr lhs = max_guard(g0(assign_ord(a, k, kRoomy)));
            TermPtr rhs = max_guard(g0(assign_nat(*mc, k, kRoomy)));
            CAPTURE(ki);
            CAPTURE(S(a));
            CHECK(term_eq(lhs, rhs));
        }
    }
}

TEST_CASE("stepping down before the base moves up never overtakes") {
    Meter m2{kRoomy};
    for (unsigned ki = 2; ki <= 3; ++ki) {
        Nat k = ki;
        Nat top = ki == 2 ? 120 : 60;
        for (Nat m = 1; m <= top; ++m) {
            TermPtr moved = assign_nat(bc_nat(m, k, kRoomy) - 1, k + 1, kRoomy);
            TermPtr stepped = fs_step(assign_nat(m, k, kRoomy), nat(k), m2);
            CAPTURE(ki);
            CAPTURE((int)m.convert_to<long>());
            CHECK(term_le(stepped, moved));
        }
    }
}

TEST_CASE("resource limits are reported by stage") {
    try {
        // Small enough to exhaust even when value caches are already warm.
        assign_nat(500, 2, Budget{5, 1u << 20});
        FAIL("expected a budget error");
    } catch (const BudgetError& e) {
        CHECK(std::string(e.what()).rfind("assignment, decomposition stage: ", 0) == 0);
    }
}
