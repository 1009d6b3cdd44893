#include "potframe/potential.hpp"

#include "potframe/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace potframe {

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken)
{
    auto used = [&](const std::string& s) { return std::find(taken.begin(), taken.end(), s) != taken.end(); };
    if (!used(base))
        return base;
    for (int k = 1;; ++k) {
        std::string s = base + std::to_string(k);
        if (!used(s))
            return s;
    }
}

namespace {

void require_cosymmetry(const EvolutionEq& eq, const RatFun& alpha)
{
    (void)LinearCharacteristic(eq, alpha);
}

// sum sigma^i u_i
JetPoly sigma_sum(const std::vector<RatFun>& s, const std::string& u)
{
    JetPoly out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out += JetPoly::var(u, 0, static_cast<int>(i)) * s[i];
    return out;
}

// sum_{i<n} (-D_x)^i (psi sigma^i f)
JetPoly adjoint_sigma_sum(const std::vector<RatFun>& s, const RatFun& psi, const JetPoly& f)
{
    JetPoly out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        JetPoly term = total_x(f * (psi * s[i]), static_cast<int>(i));
        out += (i % 2 == 0) ? term : -term;
    }
    return out;
}

} // namespace

PotentialSystem potential_system(const EvolutionEq& eq, const RatFun& alpha, const std::string& potential)
{
    require_cosymmetry(eq, alpha);
    PotentialSystem sys{eq, alpha, fresh_name(potential, {eq.dependent()}), sigma(eq, alpha), {}, {}};
    sys.vx = JetPoly::var(eq.dependent()) * alpha;
    sys.vt = -sigma_sum(sys.sigma, eq.dependent());
    return sys;
}

JetPoly compatibility_residual(const PotentialSystem& sys)
{
    return total_t_onshell(sys.vx, sys.equation) - total_x(sys.vt);
}

EvolutionEq potential_equation(const EvolutionEq& eq, const RatFun& alpha, const std::string& potential)
{
    require_cosymmetry(eq, alpha);
    const std::vector<RatFun> s = sigma(eq, alpha);
    XDiffOp ssum(s);
    const XDiffOp l = -compose(ssum, compose(XDiffOp::mult(RatFun(1) / alpha), XDiffOp::dx()));
    return EvolutionEq(fresh_name(potential, {eq.dependent()}), l);
}

ModifiedPotentialFrame modified_potential_frame(const EvolutionEq& eq, const RatFun& alpha,
                                                const std::string& potential)
{
    require_cosymmetry(eq, alpha);
    const std::string& u = eq.dependent();
    const std::string w = fresh_name(potential, {u});
    const RatFun psi = RatFun(1) / alpha;
    const RatFun c = psi.deriv_x() / psi;
    const RatFun ct = psi.deriv_t() / psi;
    const std::vector<RatFun> s = sigma(eq, alpha);

    const JetPoly wv = JetPoly::var(w);
    const JetPoly shifted = JetPoly::var(w, 0, 1) - wv * c; // = u in the modified system
    JetPoly rhs = wv * ct;
    for (std::size_t i = 0; i < s.size(); ++i)
        rhs -= total_x(shifted, static_cast<int>(i)) * (psi * s[i]);

    const auto b = linear_coefficients(rhs, w);
    if (!b)
        throw std::logic_error("modified potential equation is not linear in " + w);

    ModifiedPotentialFrame f{eq,
                             alpha,
                             psi,
                             s,
                             w,
                             JetPoly::var(u) + wv * c,
                             wv * ct - sigma_sum(s, u) * psi,
                             EvolutionEq(w, *b)};
    if (!check_frame_identities(f).all())
        throw std::logic_error("modified potential frame identities fail for alpha = " + alpha.str());
    return f;
}

FrameIdentities check_frame_identities(const ModifiedPotentialFrame& frame)
{
    const EvolutionEq& a = frame.equation;
    const EvolutionEq& b = frame.modified;
    const int n = a.order();
    FrameIdentities out;
    if (b.order() != n)
        return out;
    out.leading = b.coeff(n) == a.coeff(n);
    out.subleading = b.coeff(n - 1) == a.coeff(n - 1) - a.coeff(n).deriv_x();
    out.psi_solves = frame.psi.deriv_t() == apply(b.op(), frame.psi);
    return out;
}

std::pair<RatFun, RatFun> reduced_characteristic_linear(const EvolutionEq& eq, const RatFun& alpha,
                                                        const RatFun& beta)
{
    const ModifiedPotentialFrame f = modified_potential_frame(eq, alpha);
    require_cosymmetry(f.modified, beta);
    const RatFun first = f.psi * beta;
    RatFun second;
    for (std::size_t i = 0; i < f.sigma.size(); ++i) {
        const RatFun term = (f.psi * f.sigma[i] * beta).deriv_x(static_cast<int>(i));
        second += (i % 2 == 0) ? term : -term;
    }
    return {first, f.psi * second};
}

DensityEquivalence verify_density_equivalence(const EvolutionEq& eq, const RatFun& alpha, const RatFun& alpha_tilde)
{
    if (!eq.is_even())
        throw PreconditionError("density equivalence needs an equation of even order");
    require_cosymmetry(eq, alpha);
    require_cosymmetry(eq, alpha_tilde);
    const ModifiedPotentialFrame f = modified_potential_frame(eq, alpha);
    const std::string& u = eq.dependent();

    DensityEquivalence out;
    out.beta = alpha_tilde.deriv_x() - alpha.deriv_x() / alpha * alpha_tilde;
    const JetPoly wv = JetPoly::var(f.potential);
    const JetPoly density = wv * out.beta + JetPoly::var(u) * alpha_tilde;
    const RatFun c = f.psi.deriv_x() / f.psi;
    out.lhs = substitute(density, {{JetVar{u, 0, 0}, JetPoly::var(f.potential, 0, 1) - wv * c}}, false);
    out.rhs = total_x(wv * alpha_tilde);
    out.holds = out.lhs == out.rhs;
    return out;
}

namespace {

ModifiedPotentialFrame odd_frame(const EvolutionEq& eq, const RatFun& alpha, const XDiffOp& gamma)
{
    if (eq.is_even())
        throw PreconditionError("quadratic potential conservation laws need an equation of odd order");
    ModifiedPotentialFrame f = modified_potential_frame(eq, alpha);
    (void)QuadraticCharacteristic(f.modified, gamma);
    return f;
}

} // namespace

QuadraticReduction reduced_characteristic_quadratic(const EvolutionEq& eq, const RatFun& alpha, const XDiffOp& gamma)
{
    const ModifiedPotentialFrame f = odd_frame(eq, alpha, gamma);
    const std::string& u = eq.dependent();

    QuadraticReduction out;
    out.potential = fresh_name("v", {u});
    const JetPoly gv = apply(gamma, JetPoly::var(out.potential) * f.psi);
    out.raw = {gv * f.psi, adjoint_sigma_sum(f.sigma, f.psi, gv) * f.psi};

    const SubstitutionRules rules{{JetVar{out.potential, 0, 1}, JetPoly::var(u) * alpha}};
    out.reduced = {substitute(out.raw.first, rules, true), substitute(out.raw.second, rules, true)};
    const JetVar v{out.potential, 0, 0};
    out.depends_on_v = out.reduced.first.contains(v) || out.reduced.second.contains(v);
    return out;
}

bool is_induced_quadratic(const EvolutionEq& eq, const RatFun& alpha, const XDiffOp& gamma)
{
    const ModifiedPotentialFrame f = odd_frame(eq, alpha, gamma);
    return apply(gamma, f.psi).is_zero();
}

} // namespace potframe
