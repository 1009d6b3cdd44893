#include "potframe/darboux.hpp"

#include "potframe/errors.hpp"

#include <stdexcept>

namespace potframe {

bool is_solution(const EvolutionEq& eq, const RatFun& f)
{
    return f.deriv_t() == apply(eq.op(), f);
}

DarbouxTransform::DarbouxTransform(RatFun phi) : phi_(std::move(phi))
{
    if (phi_.is_zero())
        throw PreconditionError("Darboux seed must be nonzero");
    c_ = phi_.deriv_x() / phi_;
}

XDiffOp DarbouxTransform::op() const
{
    return XDiffOp({-c_, RatFun(1)});
}

RatFun dt_apply(const DarbouxTransform& dt, const RatFun& f)
{
    return f.deriv_x() - dt.c() * f;
}

JetPoly dt_apply(const DarbouxTransform& dt, const JetPoly& p)
{
    return total_x(p) - p * dt.c();
}

EvolutionEq dt_transform_equation(const EvolutionEq& eq_b, const RatFun& phi, const std::string& dependent)
{
    const DarbouxTransform dt(phi);
    // The zero remainder alone only says phi_t - L_B phi = h(t) phi.
    if (!is_solution(eq_b, phi))
        throw NotASolution(phi.str() + " does not solve " + eq_b.str());
    const XDiffOp m = dt.op();
    const Division d = right_divide(compose(m, eq_b.op()) - XDiffOp::mult(dt.c().deriv_t()), m);
    if (!d.remainder.is_zero())
        throw NotASolution("remainder " + d.remainder.str() + " for seed " + phi.str());
    return EvolutionEq(dependent, d.quotient);
}

bool splitting_check(const EvolutionEq& eq_a, const EvolutionEq& eq_b, const RatFun& phi)
{
    const DarbouxTransform dt(phi);
    const XDiffOp m = dt.op();
    return compose(eq_a.op(), m) - compose(m, eq_b.op()) == -XDiffOp::mult(dt.c().deriv_t());
}

DualDiagram dual_darboux_diagram(const EvolutionEq& eq_b, const RatFun& w0)
{
    const EvolutionEq eq_a = dt_transform_equation(eq_b, w0, eq_b.dependent() == "u" ? "u1" : "u");
    DualDiagram d{eq_b,
                  eq_a,
                  adjoint_equation(eq_a, "a"),
                  adjoint_equation(eq_b, "b"),
                  w0,
                  RatFun(1) / w0,
                  std::nullopt,
                  std::nullopt};
    d.alpha0_solves = is_solution(d.adjoint_a, d.alpha0);
    if (!d.alpha0_solves)
        return d;
    try {
        d.dual_image = dt_transform_equation(d.adjoint_a, d.alpha0, "b");
        d.dual_commutes = d.dual_image->coeffs() == d.adjoint_b.coeffs();
    } catch (const NotASolution&) {
        return d;
    }
    // Dual of the dual: seed 1/alpha0 = w0 on the adjoint of adjoint_b.
    try {
        d.twice_dual = dt_transform_equation(adjoint_equation(d.adjoint_b, eq_b.dependent()), RatFun(1) / d.alpha0,
                                             eq_a.dependent());
        d.twice_dual_ok = d.twice_dual->coeffs() == eq_a.coeffs();
    } catch (const NotASolution&) {
    }
    return d;
}

DualDiagram dual_darboux_check(const EvolutionEq& eq_b, const RatFun& w0)
{
    DualDiagram d = dual_darboux_diagram(eq_b, w0);
    if (!d.alpha0_solves)
        throw DiagramBroken("alpha0");
    if (!d.dual_commutes)
        throw DiagramBroken("dual");
    if (!d.twice_dual_ok)
        throw DiagramBroken("twice-dual");
    return d;
}

RatFun characteristic_space_map(const EvolutionEq& eq_a, const EvolutionEq& eq_b, const RatFun& w0,
                                const RatFun& alpha_tilde)
{
    if (!eq_a.is_even())
        throw PreconditionError("characteristic space map needs an equation of even order");
    if (dt_transform_equation(eq_b, w0).coeffs() != eq_a.coeffs())
        throw PreconditionError("eq_a is not the DT[" + w0.str() + "] image of eq_b");
    (void)LinearCharacteristic(eq_a, alpha_tilde);
    const RatFun beta = dt_apply(DarbouxTransform(RatFun(1) / w0), alpha_tilde);
    if (!is_cosymmetry(eq_b, beta))
        throw std::logic_error("image " + beta.str() + " is not a cosymmetry of " + eq_b.str());
    return beta;
}

} // namespace potframe
