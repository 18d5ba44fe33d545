#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "peuler/dsl_parser.hpp"
#include "peuler/measure.hpp"

using namespace peuler;

TEST_CASE("parse atoms and precedence") {
    UDFunction f = parse_udfunction("x^3 * twist(4)", 3, 6);
    PadicNumber four = PadicNumber::make(3, 6, 4);
    for (i64 x = 0; x < 12; ++x)
        CHECK(f.eval(x) == PadicNumber::make(3, 6, x).pow_int(3).mul(four.pow_int(u64(x))));

    UDFunction g = parse_udfunction("1 + 2*x + x^2", 5, 4);
    for (i64 x = 0; x < 10; ++x) CHECK(g.eval(x) == PadicNumber::make(5, 4, (x + 1) * (x + 1)));

    // the product route may certify an extra digit where 1 + x = 0 mod p,
    // so compare as a congruence
    UDFunction h = parse_udfunction("(1 + x)^2", 5, 4);
    for (i64 x = 0; x < 10; ++x) CHECK(h.eval(x).equal_mod(g.eval(x), 4));
}

TEST_CASE("rationals, unary minus, subtraction") {
    UDFunction f = parse_udfunction("-1/2 + x", 3, 5);
    CHECK(f.eval(0) == PadicNumber::make(3, 5, -1, 2));
    UDFunction g = parse_udfunction("x - 1/2", 3, 5);
    for (i64 x = 0; x < 9; ++x) CHECK(f.eval(x) == g.eval(x));
    UDFunction h = parse_udfunction("twist(-1)", 3, 5);
    CHECK(h.eval(3) == PadicNumber::make(3, 5, -1));
}

TEST_CASE("characters and shift") {
    UDFunction f = parse_udfunction("chi(quad,3) * x", 5, 4);
    DirichletCharacter chi = make_character(CharacterKind::quadratic, 3, 5, 4);
    for (i64 x = 0; x < 15; ++x) CHECK(f.eval(x) == chi.at(x).mul(PadicNumber::make(5, 4, x)));

    UDFunction s = parse_udfunction("shift(x^2, 1)", 5, 4);
    CHECK(s.eval(0) == PadicNumber::one(5, 4));
    CHECK(s.eval(2) == PadicNumber::make(5, 4, 9));

    UDFunction t = parse_udfunction("chi(trivial,1)", 7, 4);
    CHECK(fermionic_sum(t, 2) == PadicNumber::one(7, 4));

    UDFunction u = parse_udfunction("chi(teich,1,3)", 7, 4);
    CHECK(u.eval(1) == PadicNumber::one(7, 4));
}

TEST_CASE("round trip through str()") {
    for (const char* text : {"x^3 * twist(4)", "1/2 * x^2 + shift(x,2)", "twist(10) * x^4 - 7"}) {
        UDFunction f = parse_udfunction(text, 3, 6);
        UDFunction g = parse_udfunction(f.str(), 3, 6);
        for (i64 x = 0; x < 18; ++x) CHECK(f.eval(x) == g.eval(x));
    }
    UDFunction f = parse_udfunction("chi(quad,3) * x + chi(teich,2,11)", 5, 4);
    UDFunction g = parse_udfunction(f.str(), 5, 4);
    for (i64 x = 0; x < 25; ++x) CHECK(f.eval(x) == g.eval(x));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_udfunction("x +", 3, 5), ParseError);
    CHECK_THROWS_AS(parse_udfunction("x ^ 99", 3, 5), ParseError);
    CHECK_THROWS_AS(parse_udfunction("y", 3, 5), ParseError);
    CHECK_THROWS_AS(parse_udfunction("twist(1", 3, 5), ParseError);
    CHECK_THROWS_AS(parse_udfunction("x) ", 3, 5), ParseError);
    CHECK_THROWS_AS(parse_udfunction("chi(cubic,3)", 3, 5), ParseError);
    try {
        parse_udfunction("x * * x", 3, 5);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
        CHECK(std::string(e.what()).find("position 4") != std::string::npos);
    }
    // domain errors from constructors propagate with their own type
    CHECK_THROWS_AS(parse_udfunction("twist(1/3)", 3, 5), DomainError);
    CHECK_THROWS_AS(parse_udfunction("chi(quad,9)", 5, 4), DomainError);
}
