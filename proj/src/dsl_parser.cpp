#include "peuler/dsl_parser.hpp"

#include <cctype>

namespace peuler {

namespace {

constexpr int kMaxPow = 64;
constexpr int kMaxDepth = 32;

struct Parser {
    const std::string& text;
    size_t pos = 0;
    i64 p;
    int prec;
    int depth = 0;

    Parser(const std::string& t, i64 p_, int prec_) : text(t), p(p_), prec(prec_) {}

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    i64 parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected a number");
        i64 v = 0;
        int digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            if (++digits > 18) fail("number too large");
            v = v * 10 + (text[pos] - '0');
            ++pos;
        }
        return v;
    }

    std::string parse_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) fail("expected an identifier");
        return text.substr(start, pos - start);
    }

    PadicNumber parse_rational(bool allow_sign) {
        skip_ws();
        i64 sign = 1;
        if (allow_sign && eat('-')) sign = -1;
        i64 num = parse_uint();
        i64 den = 1;
        if (eat('/')) {
            den = parse_uint();
            if (den == 0) fail("zero denominator");
        }
        return PadicNumber::make(p, prec, sign * num, den);
    }

    UDFunction parse_expr() {
        if (++depth > kMaxDepth) fail("expression too deeply nested");
        UDFunction acc = parse_term();
        for (;;) {
            if (eat('+')) {
                acc = UDFunction::sum(acc, parse_term());
            } else if (eat('-')) {
                UDFunction rhs = parse_term();
                acc = UDFunction::sum(acc,
                                      UDFunction::scale(PadicNumber::make(p, prec, -1), rhs));
            } else {
                --depth;
                return acc;
            }
        }
    }

    UDFunction parse_term() {
        UDFunction acc = parse_factor();
        while (eat('*')) acc = UDFunction::product(acc, parse_factor());
        return acc;
    }

    UDFunction parse_factor() {
        UDFunction base = parse_atom();
        if (eat('^')) {
            i64 e = parse_uint();
            if (e > kMaxPow) fail("exponent too large");
            return pow_ast(base, e);
        }
        return base;
    }

    UDFunction pow_ast(const UDFunction& base, i64 e) {
        if (e == 0) return UDFunction::constant(PadicNumber::one(p, prec));
        if (base.root()->kind == UDFunction::Kind::kMonomial && base.root()->offset == 0)
            return UDFunction::monomial(p, prec, int(i64(base.root()->degree) * e));
        UDFunction acc = base;
        for (i64 i = 1; i < e; ++i) acc = UDFunction::product(acc, base);
        return acc;
    }

    UDFunction parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            UDFunction e = parse_expr();
            expect(')');
            return e;
        }
        if (c == '-') {
            ++pos;
            UDFunction e = parse_atom();
            return UDFunction::scale(PadicNumber::make(p, prec, -1), e);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return UDFunction::constant(parse_rational(false));
        std::string ident = parse_ident();
        if (ident == "x") return UDFunction::monomial(p, prec, 1);
        if (ident == "twist") {
            expect('(');
            PadicNumber lam = parse_rational(true);
            expect(')');
            return UDFunction::twist(lam);
        }
        if (ident == "chi") {
            expect('(');
            std::string kind = parse_ident();
            UDFunction f = parse_chi(kind);
            expect(')');
            return f;
        }
        if (ident == "shift") {
            expect('(');
            UDFunction e = parse_expr();
            expect(',');
            i64 n = parse_uint();
            expect(')');
            return shift(e, n);
        }
        fail("unknown symbol '" + ident + "'");
    }

    UDFunction parse_chi(const std::string& kind) {
        if (kind == "trivial") {
            expect(',');
            i64 mod = parse_uint();
            return UDFunction::character(make_character(CharacterKind::trivial, mod, p, prec));
        }
        if (kind == "quad") {
            expect(',');
            i64 mod = parse_uint();
            return UDFunction::character(make_character(CharacterKind::quadratic, mod, p, prec));
        }
        if (kind == "teich") {
            expect(',');
            i64 j = parse_uint();
            expect(',');
            i64 mod = parse_uint();
            return UDFunction::character(
                make_character(CharacterKind::teichmuller_power, mod, p, prec, int(j)));
        }
        fail("unknown character kind '" + kind + "' (expected trivial, quad or teich)");
    }
};

}  // namespace

UDFunction parse_udfunction(const std::string& text, i64 p, int prec) {
    Parser parser(text, p, prec);
    UDFunction f = parser.parse_expr();
    parser.skip_ws();
    if (parser.pos != text.size()) parser.fail("trailing input");
    return f;
}

}  // namespace peuler
