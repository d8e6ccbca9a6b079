#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nambu/parser.hpp"
#include "testutil.hpp"

using namespace nambu;
using testutil::PolyGen;

namespace {

SpacePtr model_space() {
    return VariableSpace::create(2, {"m1", "m2", "w1sq", "w2sq", "lambda"});
}

Polynomial var(const SpacePtr& s, int comp, int dof, std::int32_t e = 1) {
    return Polynomial::from_symbol(s, s->variable(comp, dof), e);
}

Polynomial par(const SpacePtr& s, const std::string& name, std::int32_t e = 1) {
    return Polynomial::from_symbol(s, s->parameter(name), e);
}

}  // namespace

TEST_CASE("identity parse") {
    auto s = model_space();
    CHECK(parse("x1_1", s) == var(s, 1, 1));
    CHECK(parse("  x3_2 ", s) == var(s, 3, 2));
    CHECK(parse("lambda", s) == par(s, "lambda"));
    CHECK(parse("7", s) == Polynomial::constant(s, 7));
}

TEST_CASE("hamiltonian of the coupled-oscillator model parses term for term") {
    auto s = model_space();
    const Polynomial h =
        parse("(1/(2*m1))*x2_1^2 + (m1*w1sq/2)*x3_1 + lambda*x1_1*x3_2", s);

    Polynomial expected = Rational(1, 2) * par(s, "m1", -1) * var(s, 2, 1, 2);
    expected += Rational(1, 2) * par(s, "m1") * par(s, "w1sq") * var(s, 3, 1);
    expected += par(s, "lambda") * var(s, 1, 1) * var(s, 3, 2);
    CHECK(h == expected);
}

TEST_CASE("cancellation yields the zero polynomial") {
    auto s = model_space();
    CHECK(parse("x1_1 - x1_1", s).is_zero());
    CHECK(parse("(x1_1 + x2_1)^2 - x1_1^2 - 2*x1_1*x2_1 - x2_1^2", s).is_zero());
}

TEST_CASE("operator precedence and unary minus") {
    auto s = model_space();
    CHECK(parse("x1_1 + 2*x2_1^3", s) == var(s, 1, 1) + Rational(2) * var(s, 2, 1, 3));
    CHECK(parse("-x1_1 + x1_1", s).is_zero());
    CHECK(parse("3/2*x1_1", s) == Rational(3, 2) * var(s, 1, 1));
    CHECK(parse("x1_1/2", s) == Rational(1, 2) * var(s, 1, 1));
    // '^' binds tighter than '/', so 3/2^2 = 3/4
    CHECK(parse("3/2^2", s) == Polynomial::constant(s, Rational(3, 4)));
    CHECK(parse("2^-1", s) == Polynomial::constant(s, Rational(1, 2)));
    CHECK(parse("m1^-1", s) == par(s, "m1", -1));
    CHECK(parse("1/(2*m1)", s) == Rational(1, 2) * par(s, "m1", -1));
}

TEST_CASE("parse errors carry positions") {
    auto s = model_space();

    CHECK_THROWS_AS(parse("x1_1 +", s), ParseError);
    CHECK_THROWS_AS(parse("(x1_1", s), ParseError);
    CHECK_THROWS_AS(parse("x1_1 $ 2", s), ParseError);
    CHECK_THROWS_AS(parse("1.5", s), ParseError);

    try {
        parse("x1_1 + qq", s);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
        CHECK(std::string(e.what()).find("undeclared identifier 'qq'") != std::string::npos);
    }

    // division only by invertible subexpressions
    CHECK_THROWS_AS(parse("1/x1_1", s), ParseError);
    CHECK_THROWS_AS(parse("1/(m1 + m2)", s), ParseError);
    CHECK_THROWS_AS(parse("x1_1/0", s), ParseError);
    CHECK_THROWS_AS(parse("1/(2 - 2)", s), ParseError);

    // exponent restrictions
    CHECK_THROWS_AS(parse("x1_1^-1", s), ParseError);
    CHECK_THROWS_AS(parse("x1_1^m1", s), ParseError);
    CHECK_THROWS_AS(parse("(x1_1 + 1)^-2", s), ParseError);
    CHECK_THROWS_AS(parse("x1_1^99999999999", s), ParseError);
}

TEST_CASE("bound identifiers resolve to polynomials") {
    auto s = model_space();
    const Polynomial g = parse("x3_1 - x1_1^2 + x3_2 - x1_2^2", s);
    const std::map<std::string, Polynomial> bindings = {{"G", g}};
    CHECK(parse("G", s, bindings) == g);
    CHECK(parse("G - x3_1", s, bindings) == g - var(s, 3, 1));
    CHECK_THROWS_AS(parse("Q", s, bindings), ParseError);
}

TEST_CASE("serialize then re-parse is the identity") {
    auto s = model_space();
    PolyGen gen(31);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = gen.random_poly(s, 4, 6);
        if (trial % 3 == 0) p = p * Polynomial::from_symbol(s, s->parameter("m1"), -2);
        const Polynomial q = parse(p.str(), s);
        CHECK(p == q);
        CHECK(p.str() == q.str());
    }
}

TEST_CASE("evaluate of parse agrees with direct rational arithmetic") {
    auto s = model_space();
    const Polynomial p = parse("(1/3)*x1_1^2*x2_1 - 5*lambda + 2", s);
    std::map<Symbol, Rational> at{{s->variable(1, 1), Rational(3, 2)},
                                  {s->variable(2, 1), Rational(-2)},
                                  {s->parameter("lambda"), Rational(1, 10)}};
    // (1/3)(3/2)^2(-2) - 5/10 + 2 = -3/2 - 1/2 + 2 = 0
    CHECK(p.evaluate(at) == Rational(0));

    const Polynomial q = parse("x2_1^3 - 1/2", s);
    CHECK(q.evaluate(std::map<Symbol, Rational>{{s->variable(2, 1), Rational(1, 2)}}) ==
          Rational(-3, 8));
}
