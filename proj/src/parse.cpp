#include "sdr/parse.hpp"

#include <cctype>

#include "sdr/errors.hpp"

namespace sdr {

namespace {

// Recursive descent over:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' nat]
//   atom   := '(' expr ')' | X0|X1|X2 | z<nat> | nat ['/' nat]
struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    const FieldContext& ctx;

    Parser(const std::string& text, const FieldContext& c) : s(text), ctx(c) {}

    void skip_ws() {
        while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    unsigned long parse_nat() {
        skip_ws();
        if (pos >= s.size() || !isdigit((unsigned char)s[pos]))
            throw parse_error("expected a number", pos);
        unsigned long v = 0;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) {
            v = v * 10 + (unsigned long)(s[pos] - '0');
            if (v > 1000000000UL) throw parse_error("number too large", pos);
            ++pos;
        }
        return v;
    }

    TernaryPoly parse_expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        TernaryPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = acc + parse_term();
            } else if (c == '-') {
                ++pos;
                acc = acc - parse_term();
            } else {
                break;
            }
        }
        return acc;
    }

    TernaryPoly parse_term() {
        TernaryPoly acc = parse_factor();
        while (peek() == '*') {
            ++pos;
            acc = acc * parse_factor();
        }
        return acc;
    }

    TernaryPoly parse_factor() {
        TernaryPoly base = parse_atom();
        if (peek() == '^') {
            ++pos;
            unsigned long e = parse_nat();
            if (e > 200) throw parse_error("exponent too large", pos);
            base = base.pow((std::uint32_t)e);
        }
        return base;
    }

    TernaryPoly parse_atom() {
        skip_ws();
        if (pos >= s.size()) throw parse_error("unexpected end of input", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            TernaryPoly e = parse_expr();
            if (!eat(')')) throw parse_error("expected ')'", pos);
            return e;
        }
        if (c == 'X') {
            ++pos;
            if (pos >= s.size() || s[pos] < '0' || s[pos] > '2')
                throw parse_error("expected X0, X1 or X2", pos);
            int i = s[pos] - '0';
            ++pos;
            return TernaryPoly::variable(ctx, i);
        }
        if (c == 'z') {
            ++pos;
            std::size_t at = pos;
            unsigned long m = parse_nat();
            if (!ctx.is_cyclotomic())
                throw parse_error("generator z" + std::to_string(m) +
                                      " in a non-cyclotomic context " + ctx.str(),
                                  at);
            if (ctx.conductor % m != 0)
                throw parse_error("generator conductor " + std::to_string(m) +
                                      " does not divide context conductor " +
                                      std::to_string(ctx.conductor),
                                  at);
            FieldElement g = FieldElement::zeta((unsigned)m).embed(ctx);
            return TernaryPoly::constant(g);
        }
        if (isdigit((unsigned char)c)) {
            unsigned long num = parse_nat();
            if (peek() == '/') {
                ++pos;
                unsigned long den = parse_nat();
                if (den == 0) throw parse_error("zero denominator", pos);
                Rational r((long)num, (long)den);
                return TernaryPoly::constant(FieldElement::from_rational(ctx, r));
            }
            return TernaryPoly::constant(FieldElement::from_rational(ctx, Rational((long)num)));
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos);
    }
};

}  // namespace

TernaryPoly parse_poly(const std::string& text, const FieldContext& ctx) {
    Parser p(text, ctx);
    TernaryPoly f = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) throw parse_error("trailing input", p.pos);
    return f;
}

FieldElement parse_element(const std::string& text, const FieldContext& ctx) {
    TernaryPoly f = parse_poly(text, ctx);
    for (const auto& [m, c] : f.terms())
        if (m.total() != 0) throw parse_error("expected a scalar, found variables", 0);
    if (f.is_zero()) return FieldElement::zero(ctx);
    return f.terms().begin()->second;
}

}  // namespace sdr
