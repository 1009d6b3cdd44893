#include "doctest.h"

#include "potframe/errors.hpp"
#include "potframe/ratfun.hpp"
#include "support/random.hpp"

#include <cmath>

using namespace potframe;

namespace {
const RatFun t = RatFun::t();
const RatFun x = RatFun::x();

double to_double(const Rational& q)
{
    return q.get_d();
}
} // namespace

TEST_CASE("ratfun: arithmetic examples")
{
    CHECK((RatFun(1) / x + RatFun(-1) / x).is_zero());
    CHECK((RatFun(1) / x + RatFun(-1) / x) == RatFun());
    CHECK((x * x - RatFun(1)) / (x - RatFun(1)) == x + RatFun(1));

    const RatFun lhs = RatFun(3) / x.pow(3) * x;
    CHECK(lhs == RatFun(3) / x.pow(2));
    // Both sides at (t, x) = (1, 2): 3/2^2 = 3/4.
    CHECK(lhs.eval(1, 2) == Rational(3, 4));
    CHECK((RatFun(3) / x.pow(2)).eval(1, 2) == Rational(3, 4));
}

TEST_CASE("ratfun: division by zero")
{
    CHECK_THROWS_AS(x / RatFun(), DivisionByZero);
    CHECK_THROWS_AS(RatFun(Poly(1), Poly()), DivisionByZero);
}

TEST_CASE("ratfun: derivatives")
{
    CHECK((RatFun(1) / x).deriv_x() == RatFun(-1) / (x * x));
    CHECK((RatFun(3) * t * x * x).deriv_t() == RatFun(3) * x * x);
    CHECK(RatFun(Rational(7, 3)).deriv_x().is_zero());
    CHECK(RatFun(Rational(7, 3)).deriv_t().is_zero());
}

TEST_CASE("ratfun: evaluation and poles")
{
    CHECK((RatFun(1) / x).eval(0, 2) == Rational(1, 2));
    CHECK(x.eval(Rational(5, 7), Rational(-3, 4)) == Rational(-3, 4));
    CHECK_THROWS_AS((RatFun(1) / x).eval(0, 0), PoleError);
}

TEST_CASE("ratfun: canonical form")
{
    // Denominator is monic, the fraction reduced, zero is 0/1.
    const RatFun f = (RatFun(2) * x + RatFun(2) * t) / (RatFun(4) * x * x - RatFun(4) * t * t);
    CHECK(f == RatFun(Rational(1, 2)) / (x - t));
    CHECK(f.den().leading_coefficient() == 1);
    CHECK(RatFun(Poly(), Poly::x()).den() == Poly(1));

    testing::Gen gen(7);
    for (int i = 0; i < 50; ++i) {
        const RatFun a = gen.ratfun() * gen.ratfun() + gen.ratfun();
        if (a.is_zero())
            continue;
        CHECK(a.den().leading_coefficient() == 1);
        CHECK(gcd(a.num(), a.den()) == Poly(1));
    }
}

TEST_CASE("ratfun: polynomial gcd")
{
    const Poly px = Poly::x(), pt = Poly::t();
    const Poly common = px + pt;
    CHECK(gcd(common * (px - Poly(1)), common * (pt + Poly(2))) == common);
    CHECK(gcd(px * px - Poly(1), px - Poly(1)) == px - Poly(1));
    CHECK(gcd(px * pt, pt.pow(3)) == pt);
    CHECK(gcd(px + Poly(1), px - Poly(1)) == Poly(1));
    // Content in t has to survive: gcd(t^2 x + t^2, t x^2 - t) = t (x + 1).
    CHECK(gcd(pt * pt * px + pt * pt, pt * px * px - pt) == pt * px + pt);
}

TEST_CASE("ratfun: properties")
{
    testing::Gen gen(11);
    for (int i = 0; i < 100; ++i) {
        const RatFun f = gen.ratfun();
        const RatFun g = gen.nonzero_ratfun();
        CHECK(f * g / g == f);
        CHECK(f.deriv_t().deriv_x() == f.deriv_x().deriv_t());
        CHECK((f - f).is_zero());
        CHECK((f - f).num().is_zero());
    }
}

TEST_CASE("ratfun: derivative agrees with central finite difference")
{
    testing::Gen gen(13);
    const double h = 1e-5;
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        const RatFun f = gen.nonzero_ratfun();
        const Rational t0(3, 10);
        const Rational x0(17, 10);
        const Rational hq(h);
        try {
            const double exact = to_double(f.deriv_x().eval(t0, x0));
            const double fd = (to_double(f.eval(t0, x0 + hq)) - to_double(f.eval(t0, x0 - hq))) / (2 * h);
            const double scale = std::max(std::abs(exact), 1.0);
            CHECK(std::abs(fd - exact) / scale < 1e-6);
            ++checked;
        } catch (const PoleError&) {
        }
    }
    CHECK(checked > 40);
}

TEST_CASE("ratfun: rendering")
{
    CHECK((RatFun(3) / x.pow(2)).str() == "3/x^2");
    CHECK((RatFun(-1) / x).str() == "-1/x");
    CHECK((x + RatFun(1)).str() == "x + 1");
    CHECK(((x + RatFun(1)) / (t * x)).str() == "(x + 1)/(t*x)");
    CHECK((RatFun(3) * t * x * x - RatFun(Rational(1, 2)) * x).str() == "3*t*x^2 - 1/2*x");
    CHECK(RatFun().str() == "0");
}

TEST_CASE("ratfun: fast gcd agrees with the remainder sequence")
{
    testing::Gen gen(19);
    for (int i = 0; i < 150; ++i) {
        const Poly c = gen.poly(3, 3);
        Poly a = gen.poly(3, 4) * c;
        const Poly b = gen.poly(3, 4) * c;
        if (i % 3 == 0)
            a *= c;
        const Poly g = gcd(a, b);
        CHECK(g == prs_gcd(a, b));
        if (g.is_zero())
            continue;
        CHECK_NOTHROW(exact_div(a, g));
        CHECK_NOTHROW(exact_div(b, g));
    }
}
