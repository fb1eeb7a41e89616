#include "gconv/parser.hpp"

#include <cctype>

namespace gconv {

namespace {

// Shared cursor with the usual recursive-descent helpers. Errors carry the
// character position and the expectation that failed there.
struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!try_consume(c))
            throw ParseError(std::string("expected '") + c + "'", pos);
    }
    bool try_word(const std::string& w) {
        skip_ws();
        if (text.compare(pos, w.size(), w) != 0) return false;
        std::size_t end = pos + w.size();
        if (end < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
            return false;
        pos = end;
        return true;
    }
    void expect_word(const std::string& w) {
        if (!try_word(w)) throw ParseError("expected '" + w + "'", pos);
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos;
        bool neg = false;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw ParseError("expected integer", start);
        std::int64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v < 0) throw ParseError("integer overflow", start);
            ++pos;
        }
        return neg ? -v : v;
    }

    Rat rational() {
        std::int64_t n = integer();
        if (try_consume('/')) {
            std::int64_t d = integer();
            if (d <= 0) throw ParseError("denominator must be positive", pos);
            return Rat(n, d);
        }
        return Rat(n);
    }

    ExtRat extended() {
        skip_ws();
        if (try_word("inf")) return ExtRat::pos_inf();
        std::size_t save = pos;
        if (try_consume('-')) {
            if (try_word("inf")) return ExtRat::neg_inf();
            pos = save;
        }
        return ExtRat(rational());
    }
};

// ---------------------------------------------------------------------------
// set expressions

RSet parse_union(Cursor& c);

RSet parse_interval_tail(Cursor& c, bool lo_closed) {
    ExtRat lo = c.extended();
    c.expect(',');
    ExtRat hi = c.extended();
    bool hi_closed;
    if (c.try_consume(']'))
        hi_closed = true;
    else if (c.try_consume(')'))
        hi_closed = false;
    else
        throw ParseError("expected ')' or ']'", c.pos);
    if (lo > hi) throw ParseError("interval bounds out of order", c.pos);
    if ((lo_closed && !lo.finite()) || (hi_closed && !hi.finite()))
        throw ParseError("infinite endpoint must be open", c.pos);
    return RSet::interval(lo, lo_closed, hi, hi_closed);
}

RSet parse_primary(Cursor& c) {
    c.skip_ws();
    if (c.try_word("empty")) return RSet::empty();
    if (c.try_word("R")) return RSet::line();
    if (c.try_word("compl")) {
        c.expect('(');
        RSet inner = parse_union(c);
        c.expect(')');
        return set_complement(inner);
    }
    if (c.try_word("neg")) {
        c.expect('(');
        RSet inner = parse_union(c);
        c.expect(')');
        return set_negate(inner);
    }
    if (c.try_consume('{')) {
        Rat p = c.rational();
        c.expect('}');
        return RSet::point(p);
    }
    if (c.try_consume('[')) return parse_interval_tail(c, true);
    if (c.peek() == '(') {
        // Either an open-ended interval or a parenthesized expression; try
        // the interval shape first and fall back on grouping.
        std::size_t save = c.pos;
        c.expect('(');
        try {
            return parse_interval_tail(c, false);
        } catch (const ParseError&) {
            c.pos = save;
        }
        c.expect('(');
        RSet inner = parse_union(c);
        c.expect(')');
        return inner;
    }
    // A bare rational acts as a singleton (gives "g + A" translation).
    std::size_t save = c.pos;
    try {
        return RSet::point(c.rational());
    } catch (const ParseError&) {
        throw ParseError("expected a set expression", save);
    }
}

RSet parse_sum(Cursor& c) {
    RSet acc = parse_primary(c);
    while (c.try_consume('+')) acc = minkowski_sum(acc, parse_primary(c));
    return acc;
}

RSet parse_intersection(Cursor& c) {
    RSet acc = parse_sum(c);
    while (true) {
        if (c.try_word("n"))
            acc = set_intersect(acc, parse_sum(c));
        else if (c.try_consume('\\'))
            acc = set_difference(acc, parse_sum(c));
        else
            return acc;
    }
}

RSet parse_union(Cursor& c) {
    RSet acc = parse_intersection(c);
    while (c.try_word("u")) acc = set_union(acc, parse_intersection(c));
    return acc;
}

// ---------------------------------------------------------------------------
// sequence literals

std::vector<Rat> parse_rat_list(Cursor& c) {
    c.expect('[');
    std::vector<Rat> out;
    if (c.try_consume(']')) return out;
    out.push_back(c.rational());
    while (c.try_consume(',')) out.push_back(c.rational());
    c.expect(']');
    return out;
}

IndexFamily parse_family_at(Cursor& c) {
    if (c.try_word("squares")) return IndexFamily::squares();
    if (c.try_word("pow2")) return IndexFamily::powers_of_two();
    if (c.try_word("ap")) {
        c.expect('(');
        std::int64_t first = c.integer();
        c.expect(',');
        std::int64_t step = c.integer();
        c.expect(')');
        return IndexFamily::ap(first, step);
    }
    if (c.try_word("finite")) {
        c.expect('(');
        std::vector<std::int64_t> elems;
        elems.push_back(c.integer());
        while (c.try_consume(',')) elems.push_back(c.integer());
        c.expect(')');
        return IndexFamily::finite(std::move(elems));
    }
    throw ParseError("expected index family (squares, pow2, ap(a,d), finite(...))", c.pos);
}

SeqSpec parse_seq_at(Cursor& c) {
    if (c.try_word("const")) {
        c.expect('(');
        std::vector<Rat> prefix;
        if (c.try_word("prefix")) {
            c.expect('=');
            prefix = parse_rat_list(c);
            c.expect(';');
        }
        c.expect_word("tail");
        c.expect('=');
        Rat tail = c.rational();
        c.expect(')');
        return SeqSpec::eventually_constant(std::move(prefix), tail);
    }
    if (c.try_word("per")) {
        c.expect('(');
        c.expect_word("prefix");
        c.expect('=');
        auto prefix = parse_rat_list(c);
        c.expect(';');
        c.expect_word("cycle");
        c.expect('=');
        auto cycle = parse_rat_list(c);
        c.expect(')');
        if (cycle.empty()) throw ParseError("cycle must be nonempty", c.pos);
        return SeqSpec::eventually_periodic(std::move(prefix), std::move(cycle));
    }
    if (c.try_word("spike")) {
        c.expect('(');
        c.expect_word("base");
        c.expect('=');
        Rat base = c.rational();
        c.expect(';');
        c.expect_word("spike");
        c.expect('=');
        Rat spike = c.rational();
        c.expect(';');
        c.expect_word("where");
        c.expect('=');
        IndexFamily fam = parse_family_at(c);
        c.expect(')');
        return SeqSpec::spike_mix(base, spike, fam);
    }
    if (c.try_word("tab")) {
        c.expect('(');
        c.expect_word("values");
        c.expect('=');
        auto values = parse_rat_list(c);
        c.expect(';');
        c.expect_word("beyond");
        c.expect('=');
        SeqSpec beyond = parse_seq_at(c);
        c.expect(')');
        return SeqSpec::tabulated(std::move(values), beyond);
    }
    throw ParseError("expected sequence literal (const, per, spike, tab)", c.pos);
}

}  // namespace

RSet parse_set(const std::string& text) {
    Cursor c{text};
    RSet out = parse_union(c);
    if (!c.eof()) throw ParseError("trailing input", c.pos);
    return out;
}

SeqSpec parse_seq(const std::string& text) {
    Cursor c{text};
    SeqSpec out = parse_seq_at(c);
    if (!c.eof()) throw ParseError("trailing input", c.pos);
    return out;
}

IndexFamily parse_family(const std::string& text) {
    Cursor c{text};
    IndexFamily out = parse_family_at(c);
    if (!c.eof()) throw ParseError("trailing input", c.pos);
    return out;
}

MethodSpec parse_method(const std::string& text, const NumericParams& params) {
    Cursor c{text};
    c.skip_ws();
    if (c.try_word("lim")) return MethodSpec::lim();
    if (c.try_word("cesaro")) return MethodSpec::cesaro();
    if (c.try_word("stat")) return MethodSpec::statistical();
    if (c.try_word("prod")) {
        c.expect('(');
        std::size_t start = c.pos;
        int depth = 1;
        std::size_t end = start;
        while (end < text.size() && depth > 0) {
            if (text[end] == '(') ++depth;
            if (text[end] == ')') --depth;
            if (depth > 0) ++end;
        }
        if (depth != 0) throw ParseError("unbalanced parentheses", end);
        MethodSpec inner = parse_method(text.substr(start, end - start), params);
        c.pos = end + 1;
        if (!c.eof()) throw ParseError("trailing input", c.pos);
        return MethodSpec::product(inner);
    }
    if (text.rfind("matrix:", 0) == 0) {
        std::string path = text.substr(7);
        if (path == "cesaro") return MethodSpec::matrix(MatrixSpec::cesaro(), params);
        return MethodSpec::matrix(MatrixSpec::from_file(path), params);
    }
    throw ParseError("unknown method (lim, cesaro, stat, matrix:<file>, prod(<m>))", c.pos);
}

DepthBox parse_box(const std::string& text, std::int64_t default_depth) {
    Cursor c{text};
    c.skip_ws();
    if (c.try_word("family")) {
        c.expect_word("shifted");
        c.expect('(');
        c.expect_word("r");
        c.expect('=');
        Rat r = c.rational();
        c.expect(')');
        if (!c.eof()) throw ParseError("trailing input", c.pos);
        return DepthBox{default_depth, SetFamily::shifted_interval(r, false, false)};
    }
    c.expect_word("box");
    c.expect('[');
    c.expect_word("d");
    c.expect('=');
    std::int64_t depth = c.integer();
    if (depth < 1) throw ParseError("depth must be >= 1", c.pos);
    c.expect(']');
    c.expect('{');
    // Scan a ';'-separated item, respecting singleton braces inside set
    // expressions.
    auto scan_item = [&](std::size_t start) {
        std::size_t end = start;
        int depth = 0;
        while (end < text.size()) {
            char ch = text[end];
            if (ch == '{') ++depth;
            else if (ch == '}') {
                if (depth == 0) break;
                --depth;
            } else if (ch == ';' && depth == 0)
                break;
            ++end;
        }
        return end;
    };
    // Collect ';'-separated items; the final one may be tail=...
    std::vector<RSet> factors;
    SetFamily tail = SetFamily::constant(RSet::line());
    bool saw_tail = false;
    while (true) {
        c.skip_ws();
        if (c.try_word("tail")) {
            c.expect('=');
            if (c.try_word("shifted")) {
                c.expect('(');
                c.expect_word("r");
                c.expect('=');
                Rat r = c.rational();
                c.expect(')');
                tail = SetFamily::shifted_interval(r, false, false);
            } else {
                std::size_t start = c.pos;
                std::size_t end = scan_item(start);
                tail = SetFamily::constant(parse_set(text.substr(start, end - start)));
                c.pos = end;
            }
            saw_tail = true;
        } else {
            std::size_t start = c.pos;
            std::size_t end = scan_item(start);
            if (end == start) throw ParseError("expected factor set", start);
            factors.push_back(parse_set(text.substr(start, end - start)));
            c.pos = end;
        }
        if (c.try_consume(';')) continue;
        c.expect('}');
        break;
    }
    if (!c.eof()) throw ParseError("trailing input", c.pos);
    if (static_cast<std::int64_t>(factors.size()) > depth)
        throw ParseError("more explicit factors than the stated depth", c.pos);
    (void)saw_tail;  // unfilled factors below the depth follow the tail rule at their index
    if (factors.empty()) return DepthBox{depth, std::move(tail)};
    return DepthBox{depth, SetFamily::explicit_list(std::move(factors), std::move(tail))};
}

Rat parse_rat(const std::string& text) {
    Cursor c{text};
    Rat r = c.rational();
    if (!c.eof()) throw ParseError("trailing input", c.pos);
    return r;
}

}  // namespace gconv
