#include "doctest.h"

#include "potframe/diffop.hpp"
#include "potframe/errors.hpp"
#include "support/random.hpp"

using namespace potframe;

namespace {
const RatFun t = RatFun::t();
const RatFun x = RatFun::x();

// Reference application: repeated differentiation, no normal form involved.
RatFun apply_naive(const XDiffOp& l, const RatFun& f)
{
    RatFun out, d = f;
    for (int k = 0; k <= l.order(); ++k) {
        out += l.coeff(k) * d;
        d = d.deriv_x();
    }
    return out;
}
} // namespace

TEST_CASE("diffop: construction and rendering")
{
    const XDiffOp l({x, RatFun(), RatFun(3) * t});
    CHECK(l.order() == 2);
    CHECK(l.str() == "3*t*Dx^2 + x");
    CHECK(XDiffOp::dx().str() == "Dx");
    CHECK(XDiffOp({RatFun(1), RatFun(), RatFun()}).order() == 0);
    CHECK(XDiffOp().order() == -1);
    CHECK(XDiffOp({RatFun(), RatFun()}).is_zero());
}

TEST_CASE("diffop: composition")
{
    // D o x = x D + 1
    CHECK(compose(XDiffOp::dx(), XDiffOp::mult(x)) == XDiffOp({RatFun(1), x}));
    // D^2 o f = f D^2 + 2 f_x D + f_xx
    const RatFun f = t / (x + RatFun(1));
    CHECK(compose(XDiffOp::dx(2), XDiffOp::mult(f)) == XDiffOp({f.deriv_x(2), RatFun(2) * f.deriv_x(), f}));

    testing::Gen gen(23);
    const RatFun probe = x.pow(3);
    for (int i = 0; i < 60; ++i) {
        const XDiffOp a = gen.op(3), b = gen.op(3), c = gen.op(2);
        CHECK(apply(compose(a, b), probe) == apply_naive(a, apply_naive(b, probe)));
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, b + c) == compose(a, b) + compose(a, c));
    }
}

TEST_CASE("diffop: formal adjoint")
{
    // (f D)^dagger = -f D - f_x
    const RatFun f = x * x + t;
    CHECK(formal_adjoint(f * XDiffOp::dx()) == XDiffOp({-f.deriv_x(), -f}));
    CHECK(is_self_adjoint(XDiffOp({x, RatFun(), RatFun(3) * t})));
    CHECK(!is_self_adjoint(XDiffOp::dx()));
    CHECK(is_self_adjoint(XDiffOp::dx(2)));

    testing::Gen gen(29);
    for (int i = 0; i < 60; ++i) {
        const XDiffOp a = gen.op(3), b = gen.op(3);
        CHECK(formal_adjoint(formal_adjoint(a)) == a);
        CHECK(formal_adjoint(compose(a, b)) == compose(formal_adjoint(b), formal_adjoint(a)));
        // Lagrange identity: g (A f) - f (A^dagger g) is an x-derivative.
        const RatFun p = gen.ratfun(false), q = gen.ratfun(false);
        const RatFun bilinear = q * apply(a, p) - p * apply(formal_adjoint(a), q);
        CHECK_NOTHROW(integrate_rational_x(bilinear));
    }
}

TEST_CASE("diffop: application")
{
    const XDiffOp l({x, RatFun(), RatFun(3) * t});
    CHECK(apply(l, x.pow(3)) == RatFun(18) * t * x + x.pow(4));
    CHECK(apply_jet(l, "w") == JetPoly::var("w", 0, 2) * (RatFun(3) * t) + JetPoly::var("w") * x);
    const JetPoly p = JetPoly::var("u").pow(2);
    CHECK(apply(XDiffOp::dx(), p) == total_x(p));
}

TEST_CASE("diffop: partial_t")
{
    CHECK(partial_t(XDiffOp({t * x, t * t})) == XDiffOp({x, RatFun(2) * t}));
    CHECK(partial_t(XDiffOp::dx(3)).is_zero());
}

TEST_CASE("diffop: right division")
{
    CHECK_THROWS_AS(right_divide(XDiffOp::dx(), XDiffOp()), DivisionByZero);

    const RatFun phi = x * x + t;
    const XDiffOp m({-phi.deriv_x() / phi, RatFun(1)});
    // phi is in the kernel of m.
    CHECK(apply(m, phi).is_zero());

    testing::Gen gen(31);
    for (int i = 0; i < 60; ++i) {
        const XDiffOp a = gen.op(4), b = gen.op(2);
        const Division d = right_divide(a, b);
        CHECK(compose(d.quotient, b) + d.remainder == a);
        CHECK(d.remainder.order() < b.order());
    }
    for (int i = 0; i < 30; ++i) {
        const XDiffOp q = gen.op(3);
        const Division d = right_divide(compose(q, m), m);
        CHECK(d.quotient == q);
        CHECK(d.remainder.is_zero());
    }
}

TEST_CASE("diffop: power")
{
    CHECK(power(XDiffOp::dx(), 3) == XDiffOp::dx(3));
    CHECK(power(XDiffOp::mult(x), 0) == XDiffOp::identity());
    CHECK(power(XDiffOp::mult(x), 2) == XDiffOp::mult(x * x));
}
