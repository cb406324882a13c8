#include "ordcalc/term.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace ordcalc {

bool Term::is_natural() const {
    return parts_.empty() || (parts_.size() == 1 && parts_[0].level == kUnitLevel);
}

bool Term::is_successor() const {
    return !parts_.empty() && parts_.back().level == kUnitLevel;
}

bool Term::is_principal() const {
    return parts_.size() == 1 && parts_[0].count == 1;
}

std::optional<Nat> Term::as_natural() const {
    if (parts_.empty()) return Nat(0);
    if (parts_.size() == 1 && parts_[0].level == kUnitLevel) return parts_[0].count;
    return std::nullopt;
}

TermPtr term_from_parts(std::vector<Part> parts) {
    std::vector<Part> merged;
    merged.reserve(parts.size());
    for (auto& part : parts) {
        if (part.level != kUnitLevel && (part.level < 0 || part.level > 2))
            throw DomainError("psi level out of range");
        if (part.level != kUnitLevel && !part.arg)
            throw DomainError("psi part without argument");
        if (part.level == kUnitLevel && part.arg)
            throw DomainError("unit part with argument");
        if (part.count <= 0)
            throw DomainError("part count must be positive");
        if (!merged.empty()) {
            Ordering c = compare_principal(merged.back(), part);
            if (c == Ordering::Less)
                throw DomainError("sum parts out of order: '" +
                                  print_term(term_from_parts({merged.back()})) +
                                  "' may not precede '" +
                                  print_term(term_from_parts({Part{part.level, part.arg, 1}})) +
                                  "'");
            if (c == Ordering::Equal) {
                merged.back().count += part.count;
                continue;
            }
        }
        merged.push_back(std::move(part));
    }
    return TermPtr(new Term(std::move(merged)));
}

TermPtr zero() {
    static const TermPtr t = term_from_parts({});
    return t;
}

TermPtr one() {
    static const TermPtr t = term_from_parts({Part{kUnitLevel, nullptr, 1}});
    return t;
}

TermPtr nat(const Nat& n) {
    if (n < 0) throw DomainError("natural value may not be negative");
    if (n == 0) return zero();
    return term_from_parts({Part{kUnitLevel, nullptr, n}});
}

TermPtr psi(int level, const TermPtr& arg) {
    if (level < 0 || level > 2) throw DomainError("psi level out of range");
    if (!arg) throw DomainError("psi argument may not be null");
    return term_from_parts({Part{level, arg, 1}});
}

TermPtr omega() {
    static const TermPtr t = psi(0, zero());
    return t;
}

TermPtr omega1() {
    static const TermPtr t = psi(1, zero());
    return t;
}

TermPtr omega2() {
    static const TermPtr t = psi(2, zero());
    return t;
}

Ordering compare_principal(const Part& a, const Part& b) {
    if (a.level != b.level)
        return a.level < b.level ? Ordering::Less : Ordering::Greater;
    if (a.level == kUnitLevel) return Ordering::Equal;
    return compare(a.arg, b.arg);
}

Ordering compare(const TermPtr& a, const TermPtr& b) {
    if (!a || !b) throw DomainError("compare on null term");
    if (a.get() == b.get()) return Ordering::Equal;
    const auto& pa = a->parts();
    const auto& pb = b->parts();
    const std::size_t n = std::min(pa.size(), pb.size());
    for (std::size_t i = 0; i < n; ++i) {
        Ordering c = compare_principal(pa[i], pb[i]);
        if (c != Ordering::Equal) return c;
        if (pa[i].count != pb[i].count)
            return pa[i].count < pb[i].count ? Ordering::Less : Ordering::Greater;
    }
    if (pa.size() == pb.size()) return Ordering::Equal;
    return pa.size() < pb.size() ? Ordering::Less : Ordering::Greater;
}

bool term_eq(const TermPtr& a, const TermPtr& b) { return compare(a, b) == Ordering::Equal; }
bool term_lt(const TermPtr& a, const TermPtr& b) { return compare(a, b) == Ordering::Less; }
bool term_le(const TermPtr& a, const TermPtr& b) { return compare(a, b) != Ordering::Greater; }

TermPtr add(const TermPtr& a, const TermPtr& b) {
    if (!a || !b) throw DomainError("add on null term");
    if (a->is_zero()) return b;
    if (b->is_zero()) return a;
    const Part& lead = b->parts().front();
    std::vector<Part> parts;
    for (const Part& p : a->parts()) {
        Ordering c = compare_principal(p, lead);
        if (c == Ordering::Less) break;  // absorbed by b's leading part
        parts.push_back(p);
    }
    for (const Part& p : b->parts()) parts.push_back(p);
    return term_from_parts(std::move(parts));
}

TermPtr mul_nat(const TermPtr& a, const Nat& n) {
    if (!a) throw DomainError("mul_nat on null term");
    if (n < 0) throw DomainError("mul_nat multiplier may not be negative");
    if (a->is_zero() || n == 0) return zero();
    if (!a->is_principal())
        throw DomainError("mul_nat needs a principal term or 0, got '" +
                          print_term(a) + "'");
    Part p = a->parts().front();
    p.count = n;
    return term_from_parts({p});
}

Nat norm(const TermPtr& a) {
    if (!a) throw DomainError("norm on null term");
    Nat total = 0;
    for (const Part& p : a->parts()) {
        if (p.level == kUnitLevel)
            total += p.count;
        else
            total += p.count * (1 + norm(p.arg));
    }
    return total;
}

TermPtr max_coefficient(const TermPtr& a) {
    if (!a) throw DomainError("max_coefficient on null term");
    Nat best = 0;
    for (const Part& p : a->parts()) {
        if (p.level == kUnitLevel) {
            best = std::max(best, p.count);
        } else {
            Nat inner = *max_coefficient(p.arg)->as_natural();
            best = std::max(best, inner);
        }
    }
    return nat(best);
}

TermPtr predecessor(const TermPtr& a) {
    if (!a || !a->is_successor())
        throw DomainError("predecessor needs a successor term");
    std::vector<Part> parts = a->parts();
    if (parts.back().count == 1)
        parts.pop_back();
    else
        parts.back().count -= 1;
    return term_from_parts(std::move(parts));
}

// -- printing ----------------------------------------------------------

namespace {

void print_part(std::ostringstream& out, const Part& p) {
    if (p.level == kUnitLevel) {
        out << p.count;
        return;
    }
    if (p.arg->is_zero()) {
        static const char* sugar[] = {"w", "Om", "Om2"};
        out << sugar[p.level];
    } else {
        out << 'p' << p.level << '(' << print_term(p.arg) << ')';
    }
    if (p.count != 1) out << '*' << p.count;
}

}  // namespace

std::string print_part(const Part& p) {
    std::ostringstream out;
    print_part(out, p);
    return out.str();
}

std::string print_term(const TermPtr& a) {
    if (!a) throw DomainError("print on null term");
    if (a->is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Part& p : a->parts()) {
        if (!first) out << '+';
        first = false;
        print_part(out, p);
    }
    return out.str();
}

// -- parsing -----------------------------------------------------------

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    TermPtr run() {
        skip_space();
        TermPtr t = parse_term();
        skip_space();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return t;
    }

private:
    TermPtr parse_term() {
        skip_space();
        if (peek() == '0' && !std::isdigit(peek_at(1)))
            return take(), zero();
        return parse_sum();
    }

    TermPtr parse_sum() {
        std::vector<Part> parts;
        std::size_t item_pos = pos_;
        parts.push_back(parse_item());
        skip_space();
        while (peek() == '+') {
            take();
            skip_space();
            item_pos = pos_;
            parts.push_back(parse_item());
            skip_space();
        }
        // Validate canonical order here so the offset points at the sum.
        for (std::size_t i = 1; i < parts.size(); ++i) {
            if (compare_principal(parts[i - 1], parts[i]) == Ordering::Less)
                throw ParseError("sum parts not in descending order", item_pos);
        }
        return term_from_parts(std::move(parts));
    }

    Part parse_item() {
        skip_space();
        std::size_t start = pos_;
        if (std::isdigit(peek())) {
            Nat n = parse_nat();
            if (n == 0) throw ParseError("zero is not a summand", start);
            skip_space();
            if (peek() == '*') {
                if (n != 1)
                    throw ParseError("only principal items take '*'", pos_);
                take();
                skip_space();
                Nat c = parse_positive_nat();
                return Part{kUnitLevel, nullptr, c};
            }
            return Part{kUnitLevel, nullptr, n};
        }
        Part p = parse_principal();
        skip_space();
        if (peek() == '*') {
            take();
            skip_space();
            p.count = parse_positive_nat();
        }
        return p;
    }

    Part parse_principal() {
        std::size_t start = pos_;
        if (peek() == 'p') {
            take();
            char lvl = peek();
            if (lvl < '0' || lvl > '2')
                throw ParseError("expected p0, p1 or p2", start);
            take();
            expect('(');
            TermPtr arg = parse_term();
            skip_space();
            expect(')');
            return Part{lvl - '0', arg, 1};
        }
        if (peek() == 'w') {
            take();
            return Part{0, zero(), 1};
        }
        if (peek() == 'O') {
            take();
            if (peek() != 'm') throw ParseError("expected 'Om' or 'Om2'", start);
            take();
            if (peek() == '2') {
                take();
                return Part{2, zero(), 1};
            }
            return Part{1, zero(), 1};
        }
        throw ParseError("expected a term", start);
    }

    Nat parse_nat() {
        std::size_t start = pos_;
        if (!std::isdigit(peek())) throw ParseError("expected a number", start);
        Nat value = 0;
        while (std::isdigit(peek())) {
            value = value * 10 + (peek() - '0');
            take();
        }
        if (text_[start] == '0' && pos_ - start > 1)
            throw ParseError("numbers may not have leading zeros", start);
        return value;
    }

    Nat parse_positive_nat() {
        std::size_t start = pos_;
        Nat n = parse_nat();
        if (n == 0) throw ParseError("count must be positive", start);
        return n;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_);
        take();
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char peek_at(std::size_t off) const {
        return pos_ + off < text_.size() ? text_[pos_ + off] : '\0';
    }
    void take() { ++pos_; }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(const std::string& text) {
    try {
        return Parser(text).run();
    } catch (const DomainError& e) {
        // Order violations surface from term_from_parts during parsing.
        throw ParseError(e.what(), 0);
    }
}

// -- enumeration -------------------------------------------------------

unsigned enumerate_norm_cap() { return 8; }

namespace {

struct Enumerator {
    unsigned bound;
    Meter meter;
    // principals[n] holds all principal parts of norm exactly n, sorted
    // ascending; terms_exact[n] all canonical terms of norm exactly n.
    std::vector<std::vector<Part>> principals;
    std::vector<std::vector<TermPtr>> terms_exact;

    Enumerator(unsigned b, const Budget& budget) : bound(b), meter(budget) {}

    void build() {
        principals.assign(bound + 1, {});
        terms_exact.assign(bound + 1, {});
        terms_exact[0] = {zero()};
        for (unsigned n = 1; n <= bound; ++n) {
            if (n == 1) {
                principals[1].push_back(Part{kUnitLevel, nullptr, 1});
                for (int lvl = 0; lvl <= 2; ++lvl)
                    principals[1].push_back(Part{lvl, zero(), 1});
            } else {
                for (const TermPtr& arg : terms_exact[n - 1])
                    for (int lvl = 0; lvl <= 2; ++lvl)
                        principals[n].push_back(Part{lvl, arg, 1});
            }
            std::sort(principals[n].begin(), principals[n].end(),
                      [](const Part& x, const Part& y) {
                          return compare_principal(x, y) == Ordering::Less;
                      });
            collect_terms(n);
        }
    }

    // All part lists of total norm exactly n, leading principal constrained
    // to be strictly below `limit` when given.
    void extend(unsigned n, const Part* limit, std::vector<Part>& prefix,
                std::vector<TermPtr>& out) {
        if (n == 0) {
            meter.tick();
            out.push_back(term_from_parts(prefix));
            return;
        }
        for (unsigned np = 1; np <= n; ++np) {
            for (const Part& p : principals[np]) {
                if (limit && compare_principal(p, *limit) != Ordering::Less)
                    continue;
                for (unsigned c = 1; c * np <= n; ++c) {
                    Part withCount = p;
                    withCount.count = c;
                    prefix.push_back(withCount);
                    extend(n - c * np, &p, prefix, out);
                    prefix.pop_back();
                }
            }
        }
    }

    void collect_terms(unsigned n) {
        std::vector<Part> prefix;
        extend(n, nullptr, prefix, terms_exact[n]);
    }
};

}  // namespace

std::vector<TermPtr> enumerate_terms(unsigned norm_bound, const TermPtr& below,
                                     const Budget& budget) {
    if (norm_bound > enumerate_norm_cap())
        throw DomainError("enumeration bound exceeds the safety cap of " +
                          std::to_string(enumerate_norm_cap()));
    Enumerator e(norm_bound, budget);
    e.build();
    std::vector<TermPtr> all;
    for (unsigned n = 0; n <= norm_bound; ++n)
        for (const TermPtr& t : e.terms_exact[n])
            if (!below || compare(t, below) == Ordering::Less) all.push_back(t);
    std::sort(all.begin(), all.end(),
              [](const TermPtr& x, const TermPtr& y) { return term_lt(x, y); });
    return all;
}

}  // namespace ordcalc
