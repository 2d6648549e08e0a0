#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetalg/parse.hpp"

#include <random>

using namespace jetalg;

namespace {
Poly var(int base, int order = 0) { return Poly::variable(JetVar(base, order)); }
} // namespace

TEST_CASE("literal term lists") {
    Poly expected = var(1) * var(2, 1) + var(1, 1) * var(2);
    CHECK(parse_poly("x1^(0)*x2^(1) + x1^(1)*x2^(0)") == expected);
    CHECK(parse_poly("3/2*x1^2") == (var(1) * var(1)).scaled(Rational(3, 2)));
    CHECK(parse_poly("x1*x1 - x1") == var(1) * var(1) - var(1));
    CHECK(parse_poly("  x1 *  x2 ") == var(1) * var(2));
    CHECK(parse_poly("5") == Poly(Rational(5)));
    CHECK(parse_poly("-x1 + 2") == Poly(Rational(2)) - var(1));
}

TEST_CASE("parenthesized groups distribute") {
    CHECK(parse_poly("x1*(x1 - 1)") == var(1) * var(1) - var(1));
    CHECK(parse_poly("(x1 + x2)^2") ==
          var(1) * var(1) + (var(1) * var(2)).scaled(Rational(2)) + var(2) * var(2));
    CHECK(parse_poly("2*(x1 - x2)*(x1 + x2)") ==
          (var(1) * var(1) - var(2) * var(2)).scaled(Rational(2)));
    CHECK(parse_poly("(((x1)))") == var(1));
    CHECK_THROWS_AS(parse_poly("(x1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x1)"), ParseError);
}

TEST_CASE("x3 abbreviates x3^(0); explicit jet orders parse") {
    CHECK(parse_poly("x3") == var(3));
    CHECK(parse_poly("x2^(4)") == var(2, 4));
    CHECK(parse_poly("x1^(2)^3") == var(1, 2).pow(3));
    CHECK(parse_poly("x1^2") == var(1).pow(2));
}

TEST_CASE("univariate jet naming") {
    CHECK(parse_poly("x0", true) == var(1, 0));
    CHECK(parse_poly("x2", true) == var(1, 2));
    CHECK(parse_poly("x1^(2)", true) == var(1, 2));
    CHECK(parse_monomial("x0*x2", true) ==
          Monomial::var(JetVar(1, 0)).times(Monomial::var(JetVar(1, 2))));

    // canonical output uses explicit jet orders, so it parses identically
    // under both naming conventions
    Poly f = var(1, 0) * var(1, 2) - var(1, 1).pow(2);
    CHECK(parse_poly(f.str(), false) == f);
    CHECK(parse_poly(f.str(), true) == f);
}

TEST_CASE("errors carry positions") {
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 + "), ParseError);
    CHECK_THROWS_AS(parse_poly("y1"), ParseError);
    CHECK_THROWS_AS(parse_poly("1/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("x1^-2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 x2"), ParseError);
    try {
        parse_poly("x1 + y2");
    } catch (const ParseError& e) {
        CHECK(e.position() == 5);
    }
}

TEST_CASE("malformed input always raises a parse error") {
    std::mt19937_64 eng(2024);
    const std::string alphabet = "x123^()*/+- .yq";
    for (int i = 0; i < 3000; ++i) {
        std::string s;
        size_t len = 1 + eng() % 14;
        for (size_t k = 0; k < len; ++k) s += alphabet[eng() % alphabet.size()];
        try {
            Poly p = parse_poly(s);
            CHECK(parse_poly(p.str()) == p); // whatever parses, round trips
        } catch (const ParseError&) {
        }
    }
}

TEST_CASE("spec line normalization keeps rationals intact") {
    CHECK(normalize_spec_lines("deriv m=2 / partial x2,x2 1/2") ==
          "deriv m=2 \n partial x2,x2 1/2");
    CHECK(normalize_spec_lines("a / b / c") == "a \n b \n c");
    CHECK(normalize_spec_lines("3/4") == "3/4");
}
