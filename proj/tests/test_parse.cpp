#include "doctest.h"

#include "potframe/errors.hpp"
#include "potframe/kdv_example.hpp"
#include "potframe/parse.hpp"
#include "support/random.hpp"

using namespace potframe;

namespace {
const RatFun t = RatFun::t();
const RatFun x = RatFun::x();

std::size_t error_position(const std::string& text)
{
    try {
        parse_jetpoly(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}
} // namespace

TEST_CASE("parse: rational functions")
{
    CHECK(parse_ratfun("(x + 1)/(t*x)") == (x + RatFun(1)) / (t * x));
    CHECK(parse_ratfun("3/x^2") == RatFun(3) / (x * x));
    CHECK(parse_ratfun("-2/3*t^2/(x^2 + 1)") == RatFun(Rational(-2, 3)) * t * t / (x * x + RatFun(1)));
    CHECK(parse_ratfun("  -  -x ") == x);
    CHECK(parse_ratfun("x^0") == RatFun(1));
    CHECK(parse_ratfun("123456789012345678901234567890") ==
          RatFun(Poly(Rational(mpz_class("123456789012345678901234567890")))));
    // Unary minus binds to a factor, powers bind tighter.
    CHECK(parse_ratfun("-x^2") == -(x * x));
    // One exponent per factor.
    CHECK_THROWS_AS(parse_ratfun("2^3^1"), ParseError);
    CHECK(parse_ratfun("(2^3)^2") == RatFun(64));
}

TEST_CASE("parse: jet polynomials")
{
    const JetPoly u = JetPoly::var("u");
    const JetPoly expect = JetPoly::var("u", 0, 2) * (RatFun(3) * t) + u * x;
    CHECK(parse_jetpoly("3*t*u_xx + x*u") == expect);
    CHECK(parse_jetpoly("u_txx*v1") == JetPoly::var("u", 1, 2) * JetPoly::var("v1"));
    CHECK(parse_jetpoly("w*w_xx - 1/2*w_x^2").str() == "w*w_xx - 1/2*w_x^2");
    CHECK_THROWS_AS(parse_jetpoly("u/u_x"), ParseError);
}

TEST_CASE("parse: syntax errors carry positions")
{
    CHECK(error_position("u_xt") == 3);
    CHECK(error_position("2 u") == 2);   // no implicit multiplication
    CHECK(error_position("(x + 1") == 6);
    CHECK(error_position("x +") == 3);
    CHECK(error_position("x^-1") == 2);
    CHECK(error_position("x/0") == 1);
    CHECK(error_position("t_x") == 0);
    CHECK(error_position("u_") == 2);
    CHECK(error_position("Dx") == 0);
    CHECK_THROWS_AS(parse_ratfun("u"), ParseError);
}

TEST_CASE("parse: operators")
{
    CHECK(parse_operator("Dx^1 * (3*t*Dx^2 + x)^1 * Dx^1") == gamma_ml(1, 1));
    CHECK(parse_operator("Dx^1 * (3*t*Dx^2 + x)^2 * Dx^1") == gamma_ml(1, 2));
    CHECK(parse_operator("Dx^4") == XDiffOp::dx(4));
    CHECK(parse_operator("3*t*Dx^2 + x").str() == "3*t*Dx^2 + x");
    // Composition, not commutative multiplication.
    CHECK(parse_operator("Dx*x") == XDiffOp({RatFun(1), x}));
    CHECK(parse_operator("x*Dx") == XDiffOp({RatFun(), x}));
    CHECK(parse_operator("0").is_zero());
    CHECK_THROWS_AS(parse_operator("Dx*u"), ParseError);
    CHECK_THROWS_AS(parse_operator("x/Dx"), ParseError);
    CHECK_THROWS_AS(parse_operator("Dx^13", {12}), OrderLimitExceeded);
    CHECK_THROWS_AS(parse_operator("(Dx^4 + 1)^4", {12}), OrderLimitExceeded);
    CHECK_NOTHROW(parse_operator("Dx^12", {12}));
}

TEST_CASE("parse: equations")
{
    const EvolutionEq e = parse_equation("u_t = u_xxx - (3/x^2)*u_x + (3/x^3)*u");
    CHECK(e.order() == 3);
    CHECK(e.str() == "u_t = u_xxx - 3/x^2*u_x + 3/x^3*u");
    CHECK(parse_equation(e.str()) == e);
    CHECK(parse_equation("w_t=w_xxx").dependent() == "w");

    CHECK_THROWS_AS(parse_equation("u_t = u*u_x"), NotLinear);
    CHECK_THROWS_AS(parse_equation("u_t = u_xx + v"), NotLinear);
    CHECK_THROWS_AS(parse_equation("u_t = u_xx + 1"), NotLinear);
    CHECK_THROWS_AS(parse_equation("u_t = u_txx"), NotLinear);
    CHECK_THROWS_AS(parse_equation("u_t = 0*u_xx"), LeadingCoefficientZero);
    CHECK_THROWS_AS(parse_equation("u_t = u_xx - u_xx"), LeadingCoefficientZero);
    CHECK_THROWS_AS(parse_equation("u_t = u_x"), PreconditionError);
    CHECK_THROWS_AS(parse_equation("u_x = u_xx"), ParseError);
    CHECK_THROWS_AS(parse_equation("u_t u_xx"), ParseError);
    CHECK_THROWS_AS(parse_equation("u_t = u_x^13", {12}), NotLinear);
    CHECK_THROWS_AS(parse_equation("u_t = u_xxxxxxxxxxxxx", {12}), OrderLimitExceeded);
}

TEST_CASE("parse: render round trip")
{
    testing::Gen gen(29);
    for (int i = 0; i < 200; ++i) {
        const RatFun f = gen.ratfun() * gen.ratfun() - gen.ratfun();
        CHECK(parse_ratfun(f.str()) == f);
    }
    for (int i = 0; i < 200; ++i) {
        const JetPoly p = gen.jet_poly({"u", "v", "w2"}, 3, 2, 4, 3);
        CHECK(parse_jetpoly(p.str()) == p);
    }
    for (int i = 0; i < 200; ++i) {
        const XDiffOp l = gen.op(5);
        CHECK(parse_operator(l.str()) == l);
    }
    for (int i = 0; i < 200; ++i) {
        const EvolutionEq e = gen.equation(gen.integer(2, 5), gen.pick(std::vector<std::string>{"u", "w", "a1"}));
        CHECK(parse_equation(e.str()) == e);
    }
}
