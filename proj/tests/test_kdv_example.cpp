#include "doctest.h"

#include "potframe/errors.hpp"
#include "potframe/kdv_example.hpp"

using namespace potframe;

namespace {
const RatFun t = RatFun::t();
const RatFun x = RatFun::x();

// Gamma_ml applied to f by repeated differentiation, no operator algebra.
RatFun gamma_apply_naive(int m, int l, RatFun f)
{
    f = f.deriv_x(m);
    for (int k = 0; k < l; ++k)
        f = RatFun(3) * t * f.deriv_x(2) + x * f;
    return f.deriv_x(m);
}
} // namespace

TEST_CASE("kdv: the Gamma_ml family")
{
    CHECK(gamma_ml(0, 0) == XDiffOp::identity());
    CHECK(gamma_ml(0, 1) == XDiffOp({x, RatFun(), RatFun(3) * t}));
    CHECK(gamma_ml(1, 1) == XDiffOp({RatFun(), RatFun(1), x, RatFun(), RatFun(3) * t}));
    CHECK(apply(gamma_ml(1, 1), x) == RatFun(1));
    CHECK_THROWS_AS(gamma_ml(-1, 0), PreconditionError);

    for (int m = 0; m <= 3; ++m)
        for (int l = 0; l <= 3; ++l) {
            const GammaML g(m, l);
            CHECK(g.order() == 2 * m + 2 * l);
            CHECK(is_self_adjoint(g.op));
            for (const RatFun& f : {x, x.pow(5), t * x.pow(3) + RatFun(1) / (x + RatFun(1))})
                CHECK(apply(g.op, f) == gamma_apply_naive(m, l, f));
        }
}

TEST_CASE("kdv: reproduction report")
{
    const KdvReport r = reproduce_kdv_example();
    CHECK(r.image_matches);
    CHECK(r.image.str() == "u_t = u_xxx - 3/x^2*u_x + 3/x^3*u");
    CHECK(r.modified_self_adjoint);
    CHECK(r.image_self_adjoint);
    CHECK(r.alpha == RatFun(1) / x);
    CHECK(r.alpha_is_cosymmetry);
    CHECK(r.potential_system_matches);
    CHECK(r.potential_system_compatible);
    CHECK(r.recovered_matches);
    CHECK(r.recovered.str() == "w_t = w_xxx");
    CHECK(r.diagram_commutes);
    CHECK(r.all_verified());
    REQUIRE(r.grid.size() == 25);

    for (const GammaCell& c : r.grid) {
        const bool killed = gamma_apply_naive(c.m, c.l, x).is_zero();
        CHECK(c.induced == killed);
        CHECK(c.gamma_psi == gamma_apply_naive(c.m, c.l, x));
        if (c.m >= 2)
            CHECK(c.induced);
        if (c.m == 0 || (c.m == 1 && c.l >= 1))
            CHECK(!c.induced);
    }
    const auto d = r.discrepancies();
    REQUIRE(d.size() == 1);
    CHECK(d[0]->m == 1);
    CHECK(d[0]->l == 0);

    const std::string text = render_text(r);
    CHECK(text.find("[DISCREPANCY]") != std::string::npos);
    CHECK(text.find("discrepancies: 1 (1,0)") != std::string::npos);
    CHECK(render_text(reproduce_kdv_example()) == text);
}
