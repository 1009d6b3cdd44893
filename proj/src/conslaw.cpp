#include "potframe/conslaw.hpp"

#include "potframe/errors.hpp"

namespace potframe {

EvolutionEq::EvolutionEq(std::string dependent, std::vector<RatFun> coeffs)
    : dep_(std::move(dependent)), a_(std::move(coeffs))
{
    if (a_.empty() || a_.back().is_zero())
        throw LeadingCoefficientZero();
    if (order() < 2)
        throw PreconditionError("evolution equation order must be at least 2, got " +
                                std::to_string(order()));
}

JetPoly EvolutionEq::rhs() const
{
    return apply_jet(op(), dep_);
}

std::string EvolutionEq::str() const
{
    return JetVar{dep_, 1, 0}.str() + " = " + rhs().str();
}

JetPoly total_t_onshell(const JetPoly& p, const EvolutionEq& eq)
{
    return total_t_onshell(p, EvolutionRules{{eq.dependent(), eq.rhs()}});
}

EvolutionEq adjoint_equation(const EvolutionEq& eq, std::string dependent)
{
    return EvolutionEq(std::move(dependent), -formal_adjoint(eq.op()));
}

RatFun adjoint_residual(const EvolutionEq& eq, const RatFun& alpha)
{
    return alpha.deriv_t() + apply(formal_adjoint(eq.op()), alpha);
}

bool is_cosymmetry(const EvolutionEq& eq, const RatFun& alpha)
{
    return adjoint_residual(eq, alpha).is_zero();
}

std::vector<RatFun> sigma(const EvolutionEq& eq, const RatFun& alpha)
{
    const int n = eq.order();
    std::vector<RatFun> s(static_cast<std::size_t>(n));
    s[n - 1] = -(alpha * eq.coeff(n));
    for (int i = n - 2; i >= 0; --i)
        s[i] = -(alpha * eq.coeff(i + 1)) - s[i + 1].deriv_x();
    return s;
}

LinearCharacteristic::LinearCharacteristic(const EvolutionEq& eq, RatFun alpha) : alpha_(std::move(alpha))
{
    const RatFun r = adjoint_residual(eq, alpha_);
    if (alpha_.is_zero() || !r.is_zero())
        throw NotACosymmetry(alpha_.is_zero() ? std::string("alpha = 0") : r.str());
}

QuadraticCharacteristic::QuadraticCharacteristic(const EvolutionEq& eq, XDiffOp gamma) : gamma_(std::move(gamma))
{
    if (gamma_.is_zero())
        throw NotACharacteristic("Gamma = 0");
    if (!is_self_adjoint(gamma_))
        throw NotACharacteristic("Gamma is not self-adjoint: " + gamma_.str());
    const XDiffOp r = quadratic_characteristic_residual(eq, gamma_);
    if (!r.is_zero())
        throw NotACharacteristic("Gamma_t + Gamma L + L^dagger Gamma = " + r.str());
}

JetPoly onshell_divergence(const JetPoly& density, const JetPoly& flux, const EvolutionEq& eq)
{
    return total_t_onshell(density, eq) + total_x(flux);
}

ConservedVector::ConservedVector(JetPoly density, JetPoly flux, EvolutionEq eq)
    : f_(std::move(density)), g_(std::move(flux)), eq_(std::move(eq))
{
    const JetPoly div = onshell_divergence(f_, g_, eq_);
    if (!div.is_zero())
        throw PreconditionError("on-shell divergence of (F, G) is not zero: " + div.str());
}

namespace {

JetPoly canonical_flux(const EvolutionEq& eq, const std::vector<RatFun>& s)
{
    JetPoly g;
    for (std::size_t i = 0; i < s.size(); ++i)
        g += JetPoly::var(eq.dependent(), 0, static_cast<int>(i)) * s[i];
    return g;
}

} // namespace

ConservedVector canonical_cv(const EvolutionEq& eq, const RatFun& alpha)
{
    const LinearCharacteristic ch(eq, alpha);
    const JetPoly f = JetPoly::var(eq.dependent()) * ch.alpha();
    return ConservedVector(f, canonical_flux(eq, sigma(eq, ch.alpha())), eq);
}

DivergenceIdentity divergence_identity(const EvolutionEq& eq, const RatFun& alpha)
{
    if (alpha.is_zero())
        throw PreconditionError("alpha must be nonzero");
    const std::string& u = eq.dependent();
    const JetPoly f = JetPoly::var(u) * alpha;
    const JetPoly g = canonical_flux(eq, sigma(eq, alpha));

    DivergenceIdentity out;
    out.divergence = total_t_free(f) + total_x(g);
    out.expected = (JetPoly::var(u, 1, 0) - eq.rhs()) * alpha + JetPoly::var(u) * adjoint_residual(eq, alpha);
    out.holds = out.divergence == out.expected;
    return out;
}

XDiffOp quadratic_characteristic_residual(const EvolutionEq& eq, const XDiffOp& gamma)
{
    const XDiffOp l = eq.op();
    return partial_t(gamma) + compose(gamma, l) + compose(formal_adjoint(l), gamma);
}

bool is_quadratic_characteristic(const EvolutionEq& eq, const XDiffOp& gamma)
{
    return !gamma.is_zero() && is_self_adjoint(gamma) && quadratic_characteristic_residual(eq, gamma).is_zero();
}

bool is_quadratic_characteristic_euler(const EvolutionEq& eq, const XDiffOp& gamma)
{
    if (gamma.is_zero())
        return false;
    const std::string& w = eq.dependent();
    const JetPoly lhs = apply_jet(gamma, w) * (JetPoly::var(w, 1, 0) - eq.rhs());
    return euler(lhs, w).is_zero();
}

ConservedVector quadratic_cv(const EvolutionEq& eq, const XDiffOp& gamma)
{
    if (gamma.is_zero() || !is_self_adjoint(gamma))
        throw NotACharacteristic("Gamma must be a nonzero self-adjoint operator, got " + gamma.str());
    const std::string& w = eq.dependent();
    const JetPoly f = JetPoly::var(w) * apply_jet(gamma, w) * RatFun(Rational(1, 2));
    const JetPoly dtf = total_t_onshell(f, eq);
    JetPoly g;
    try {
        g = -integrate_x(dtf);
    } catch (const NotADivergence& e) {
        throw NotACharacteristic("D_t F is not a total x-derivative on solutions; residual: " + e.residual());
    }
    return ConservedVector(f, g, eq);
}

} // namespace potframe
