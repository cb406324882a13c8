#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "ordcalc/term.hpp"

using namespace ordcalc;

namespace {

TermPtr P(const std::string& s) { return parse_term(s); }
std::string S(const TermPtr& t) { return print_term(t); }

std::vector<TermPtr> enumerated(unsigned bound, const TermPtr& below = nullptr) {
    return enumerate_terms(bound, below, Budget{});
}

}  // namespace

TEST_CASE("ordering basics") {
    CHECK(compare(zero(), one()) == Ordering::Less);
    CHECK(compare(omega(), omega1()) == Ordering::Less);
    CHECK(compare(P("p0(1)+w"), P("p0(1)+p0(1)")) == Ordering::Less);

    CHECK(compare(one(), omega()) == Ordering::Less);
    CHECK(compare(omega1(), omega2()) == Ordering::Less);
    CHECK(compare(nat(7), nat(7)) == Ordering::Equal);
    CHECK(compare(nat(8), nat(7)) == Ordering::Greater);
    CHECK(compare(P("w*2"), P("w*3")) == Ordering::Less);
    CHECK(compare(P("w*2+1"), P("w*2")) == Ordering::Greater);
    CHECK(compare(P("p0(w)"), P("p0(1)")) == Ordering::Greater);
    CHECK(term_lt(P("p0(Om)"), P("p1(w)")));
    CHECK(term_le(P("w+1"), P("w+1")));
}

TEST_CASE("addition with absorption") {
    CHECK(term_eq(add(P("p0(1)"), P("w+w")), P("p0(1)+w*2")));
    CHECK(term_eq(add(omega(), P("p0(1)")), P("p0(1)")));
    CHECK(term_eq(add(nat(5), zero()), nat(5)));

    CHECK(term_eq(add(zero(), P("Om+1")), P("Om+1")));
    CHECK(term_eq(add(nat(2), nat(3)), nat(5)));
    CHECK(term_eq(add(P("w+5"), omega()), P("w*2")));
    CHECK(term_eq(add(P("Om+w"), P("w+1")), P("Om+w*2+1")));
}

TEST_CASE("natural multiples of principals") {
    CHECK(term_eq(mul_nat(omega(), 3), P("w*3")));
    CHECK(term_eq(mul_nat(omega1(), 0), zero()));
    CHECK(term_eq(mul_nat(one(), 5), nat(5)));

    CHECK(term_eq(mul_nat(zero(), 9), zero()));
    CHECK(term_eq(mul_nat(P("p0(Om)"), 2), P("p0(Om)*2")));
    CHECK_THROWS_AS(mul_nat(P("w+1"), 2), DomainError);
    CHECK_THROWS_AS(mul_nat(P("w*2"), 2), DomainError);
}

TEST_CASE("norm and max coefficient") {
    CHECK(norm(zero()) == 0);
    CHECK(norm(P("p0(Om)")) == 2);
    CHECK(norm(P("w*2+1")) == 3);

    CHECK(norm(one()) == 1);
    CHECK(norm(nat(11)) == 11);
    CHECK(norm(P("p0(w*2)")) == 3);
    CHECK(norm(P("Om2")) == 1);

    CHECK(term_eq(max_coefficient(zero()), zero()));
    CHECK(term_eq(max_coefficient(P("p0(Om+p0(7))")), nat(7)));
    CHECK(term_eq(max_coefficient(nat(11)), nat(11)));
    CHECK(term_eq(max_coefficient(P("p0(3)+2")), nat(3)));
    CHECK(term_eq(max_coefficient(P("p0(0)*9")), zero()));
    CHECK(term_eq(max_coefficient(P("p1(p0(4)+2)+p0(6)")), nat(6)));
}

TEST_CASE("enumeration at small bounds") {
    auto e0 = enumerated(0);
    REQUIRE(e0.size() == 1);
    CHECK(term_eq(e0[0], zero()));

    auto e1 = enumerated(1);
    REQUIRE(e1.size() == 5);
    CHECK(term_eq(e1[0], zero()));
    CHECK(term_eq(e1[1], one()));
    CHECK(term_eq(e1[2], omega()));
    CHECK(term_eq(e1[3], omega1()));
    CHECK(term_eq(e1[4], omega2()));

    auto e2 = enumerated(2, omega1());
    auto contains = [&](const TermPtr& t) {
        return std::any_of(e2.begin(), e2.end(),
                           [&](const TermPtr& u) { return term_eq(u, t); });
    };
    CHECK(contains(P("p0(1)")));
    CHECK(contains(P("p0(w)")));
    CHECK(contains(nat(2)));
    CHECK(contains(P("w+1")));
    for (const auto& t : e2) CHECK(term_lt(t, omega1()));
    for (const auto& t : e2) CHECK(norm(t) <= 2);
}

TEST_CASE("parse and print") {
    CHECK(S(P("p0(p1(0)+w*2)+11")) == "p0(Om+w*2)+11");
    CHECK(S(omega1()) == "Om");
    CHECK_THROWS_AS(P("p0(0)+p1(0)"), ParseError);

    CHECK(S(zero()) == "0");
    CHECK(S(one()) == "1");
    CHECK(S(nat(42)) == "42");
    CHECK(S(P("p2(0)")) == "Om2");
    CHECK(S(P("p0(0)")) == "w");
    CHECK(S(P("p0(0)*1")) == "w");
    CHECK(S(P("1*5")) == "5");
    CHECK(S(P(" p0( Om + w * 2 ) + 11 ")) == "p0(Om+w*2)+11");

    CHECK_THROWS_AS(P(""), ParseError);
    CHECK_THROWS_AS(P("01"), ParseError);
    CHECK_THROWS_AS(P("0+1"), ParseError);
    CHECK_THROWS_AS(P("w*0"), ParseError);
    CHECK_THROWS_AS(P("3*2"), ParseError);
    CHECK_THROWS_AS(P("w+"), ParseError);
    CHECK_THROWS_AS(P("p0(w"), ParseError);
    CHECK_THROWS_AS(P("w w"), ParseError);
    CHECK_THROWS_AS(P("1+w"), ParseError);
    CHECK(S(P("2+3")) == "5");
    CHECK(S(P("w+w")) == "w*2");

    try {
        P("p0(0)+p1(0)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
        CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
    }
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(term_from_parts({Part{0, zero(), 1}, Part{1, zero(), 1}}),
                    DomainError);
    CHECK_THROWS_AS(psi(3, zero()), DomainError);
    CHECK_THROWS_AS(nat(Nat(-1)), DomainError);

    TermPtr merged = term_from_parts({Part{0, zero(), 2}, Part{0, zero(), 3}});
    CHECK(term_eq(merged, P("w*5")));

    CHECK(P("w+3")->is_successor());
    CHECK_FALSE(P("w")->is_successor());
    CHECK(term_eq(predecessor(P("w+3")), P("w+2")));
    CHECK(term_eq(predecessor(one()), zero()));
    CHECK_THROWS_AS(predecessor(omega()), DomainError);
    CHECK_THROWS_AS(predecessor(zero()), DomainError);

    CHECK(nat(0)->is_zero());
    CHECK(nat(9)->is_natural());
    CHECK(*P("17")->as_natural() == 17);
    CHECK_FALSE(P("w+1")->as_natural().has_value());
}

TEST_CASE("order laws on enumerated terms") {
    auto ts = enumerated(3);
    REQUIRE(ts.size() > 10);

    // Enumeration is strictly ascending, which packages trichotomy,
    // antisymmetry and absence of descending cycles for these terms.
    for (std::size_t i = 0; i < ts.size(); ++i)
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            CHECK(compare(ts[i], ts[j]) == Ordering::Less);

    std::mt19937 rng(20240814);
    std::uniform_int_distribution<std::size_t> pick(0, ts.size() - 1);
    for (int n = 0; n < 20000; ++n) {
        std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
        const auto &a = ts[i], &b = ts[j], &c = ts[k];
        if (term_lt(a, b) && term_lt(b, c)) CHECK(term_lt(a, c));
        Ordering ab = compare(a, b);
        Ordering ba = compare(b, a);
        if (ab == Ordering::Less) CHECK(ba == Ordering::Greater);
        if (ab == Ordering::Equal) CHECK(ba == Ordering::Equal);
    }
}

TEST_CASE("algebraic laws on enumerated terms") {
    auto small = enumerated(2);

    for (const auto& p : small) {
        if (!p->is_principal()) continue;
        for (const auto& a : small) {
            if (!term_lt(a, p)) continue;
            for (const auto& b : small) {
                if (!term_lt(b, p)) continue;
                CHECK(term_lt(add(a, b), p));
            }
        }
    }

    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small)
                CHECK(term_eq(add(add(a, b), c), add(a, add(b, c))));

    for (const auto& a : small) {
        if (!(a->is_zero() || a->is_principal())) continue;
        for (unsigned m = 0; m <= 4; ++m)
            for (unsigned n = 0; n <= 4; ++n)
                CHECK(term_eq(mul_nat(a, Nat(m) + n),
                              add(mul_nat(a, m), mul_nat(a, n))));
        for (unsigned n = 0; n <= 4; ++n)
            CHECK(norm(mul_nat(a, n)) == Nat(n) * norm(a));
    }

    for (const auto& a : small)
        for (const auto& b : small)
            CHECK(norm(add(a, b)) <= norm(a) + norm(b));
}

TEST_CASE("print then parse is the identity") {
    for (const auto& t : enumerated(3)) {
        CAPTURE(S(t));
        CHECK(term_eq(P(S(t)), t));
    }
}
