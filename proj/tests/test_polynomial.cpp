#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <thread>

#include "nambu/polynomial.hpp"
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

}  // namespace

TEST_CASE("canonical form basics") {
    auto s = model_space();
    const Polynomial x = var(s, 1, 1);

    CHECK((x - x).is_zero());
    CHECK(Polynomial::zero(s).is_zero());
    CHECK(Polynomial::constant(s, Rational(0)).is_zero());
    CHECK_FALSE(Polynomial::constant(s, Rational(1, 2)).is_zero());
    CHECK(Polynomial::zero(s) == Polynomial::constant(s, 0));

    // scaling by zero collapses to the empty map
    CHECK((x.scaled(Rational(0))).is_zero());
    CHECK(x.term_count() == 1);
    CHECK((x + x).term_count() == 1);
    CHECK((x + x) == Rational(2) * x);
}

TEST_CASE("ring properties on random pairs") {
    auto s = model_space();
    PolyGen gen(2024);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = gen.random_poly(s, 4, 5);
        const Polynomial q = gen.random_poly(s, 4, 5);
        CHECK((p * q - q * p).is_zero());
        CHECK(((p + q) - p - q).is_zero());
    }
}

TEST_CASE("differentiation: power rule and golden examples") {
    auto s = model_space();

    // d/dx1_1 (x1_1)^2 = 2 x1_1
    CHECK(var(s, 1, 1, 2).derivative(s->variable(1, 1)) == Rational(2) * var(s, 1, 1));

    // d/dx3_2 (lambda x1_1 x3_2) = lambda x1_1
    const Polynomial coupling =
        Polynomial::from_symbol(s, s->parameter("lambda")) * var(s, 1, 1) * var(s, 3, 2);
    CHECK(coupling.derivative(s->variable(3, 2)) ==
          Polynomial::from_symbol(s, s->parameter("lambda")) * var(s, 1, 1));

    // G has no x2_a dependence
    const Polynomial g = var(s, 3, 1) - var(s, 1, 1, 2) + var(s, 3, 2) - var(s, 1, 2, 2);
    CHECK(g.derivative(s->variable(2, 1)).is_zero());

    CHECK_THROWS_AS(g.derivative(s->parameter("m1")), std::invalid_argument);
}

TEST_CASE("differentiation is linear and satisfies the product rule") {
    auto s = model_space();
    PolyGen gen(7);
    for (int trial = 0; trial < 100; ++trial) {
        const Polynomial p = gen.random_poly(s, 3, 4);
        const Polynomial q = gen.random_poly(s, 3, 4);
        const Symbol v = s->variable(1 + trial % 3, 1 + trial % 2);
        CHECK((p + q).derivative(v) == p.derivative(v) + q.derivative(v));
        CHECK((p * q).derivative(v) == p.derivative(v) * q + p * q.derivative(v));
    }
}

TEST_CASE("mixed partials commute") {
    auto s = model_space();
    PolyGen gen(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p = gen.random_poly(s, 4, 5);
        const Symbol u = s->variable(1 + trial % 3, 1);
        const Symbol v = s->variable(1 + (trial / 3) % 3, 2);
        CHECK(p.derivative(u).derivative(v) == p.derivative(v).derivative(u));
    }
}

TEST_CASE("evaluation") {
    auto s = model_space();
    const Symbol x = s->variable(1, 1);

    // x1_1 + 2 at x1_1 = 3
    const Polynomial p = var(s, 1, 1) + Polynomial::constant(s, 2);
    CHECK(p.evaluate(std::map<Symbol, Rational>{{x, Rational(3)}}) == Rational(5));

    // a bare parameter evaluates to its assignment
    const Polynomial lam = Polynomial::from_symbol(s, s->parameter("lambda"));
    CHECK(lam.evaluate(std::map<Symbol, Rational>{{s->parameter("lambda"), Rational(1, 10)}}) ==
          Rational(1, 10));

    CHECK_THROWS_AS(p.evaluate(std::map<Symbol, Rational>{}), std::invalid_argument);

    // negative parameter powers evaluate exactly
    const Polynomial inv = Polynomial::from_symbol(s, s->parameter("m1"), -2);
    CHECK(inv.evaluate(std::map<Symbol, Rational>{{s->parameter("m1"), Rational(3)}}) ==
          Rational(1, 9));

    const double d =
        p.evaluate(std::map<Symbol, double>{{x, 0.5}});
    CHECK(d == doctest::Approx(2.5));
}

TEST_CASE("laurent parameter exponents") {
    auto s = model_space();
    const Polynomial m1inv = Polynomial::from_symbol(s, s->parameter("m1"), -1);
    const Polynomial m1 = Polynomial::from_symbol(s, s->parameter("m1"));

    CHECK((m1inv * m1) == Polynomial::constant(s, 1));
    CHECK(m1inv.is_invertible());
    CHECK(m1inv.inverse() == m1);
    CHECK_FALSE(var(s, 1, 1).is_invertible());
    CHECK_THROWS_AS(var(s, 1, 1).inverse(), std::domain_error);
    CHECK_THROWS_AS(Polynomial::zero(s).inverse(), std::domain_error);
    CHECK_THROWS_AS(Polynomial::from_symbol(s, s->variable(1, 1), -1), std::invalid_argument);
}

TEST_CASE("substitution") {
    auto s = model_space();
    const Polynomial p = var(s, 1, 1, 2) * var(s, 2, 1) + var(s, 2, 1);
    const Polynomial q = p.substitute(s->variable(1, 1).index, Rational(2));
    CHECK(q == Rational(5) * var(s, 2, 1));
    // substituting zero kills positive powers
    CHECK(p.substitute(s->variable(1, 1).index, Rational(0)) == var(s, 2, 1));
}

TEST_CASE("deterministic serialization") {
    auto s = model_space();
    const Polynomial lam = Polynomial::from_symbol(s, s->parameter("lambda"));
    const Polynomial value = lam * Polynomial::from_symbol(s, s->parameter("m1")) *
                             Polynomial::from_symbol(s, s->parameter("w1sq")) * var(s, 1, 2);
    CHECK(value.str() == "lambda*m1*w1sq*x1_2");

    CHECK(Polynomial::zero(s).str() == "0");
    CHECK(Polynomial::constant(s, Rational(-3, 2)).str() == "-3/2");
    CHECK((var(s, 1, 1) - Rational(2) * var(s, 2, 1)).str() == "x1_1 - 2*x2_1");
    CHECK(Polynomial::from_symbol(s, s->parameter("m1"), -1).str() == "m1^-1");
    CHECK((Rational(1, 2) * var(s, 3, 1)).str() == "1/2*x3_1");
}

TEST_CASE("exponent bounds are enforced") {
    auto s = model_space();
    const Polynomial big = var(s, 1, 1, 2000000000);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("concurrent evaluation and differentiation") {
    auto s = model_space();
    PolyGen gen(99);
    const Polynomial p = gen.random_poly(s, 4, 8);
    const Polynomial expected = p.derivative(s->variable(2, 1));

    std::vector<Polynomial> results(8, Polynomial::zero(s));
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t) {
        workers.emplace_back([&, t] { results[t] = p.derivative(s->variable(2, 1)); });
    }
    for (auto& w : workers) w.join();
    for (const auto& r : results) CHECK(r == expected);
}
