#ifndef POTFRAME_DARBOUX_HPP
#define POTFRAME_DARBOUX_HPP

#include "potframe/conslaw.hpp"

#include <optional>
#include <string>

namespace potframe {

bool is_solution(const EvolutionEq& eq, const RatFun& f);

/// DT[phi](w) = w_x - (phi_x/phi) w.
class DarbouxTransform
{
public:
    explicit DarbouxTransform(RatFun phi); // throws PreconditionError for phi = 0

    const RatFun& phi() const noexcept { return phi_; }
    const RatFun& c() const noexcept { return c_; }
    // D_x - c
    XDiffOp op() const;

private:
    RatFun phi_;
    RatFun c_;
};

RatFun dt_apply(const DarbouxTransform& dt, const RatFun& f);
JetPoly dt_apply(const DarbouxTransform& dt, const JetPoly& p);

// L_A with L_A o M = M o L_B - c_t, M = D_x - c, found by right division.
// Throws NotASolution unless phi solves eq_b and the division is exact.
EvolutionEq dt_transform_equation(const EvolutionEq& eq_b, const RatFun& phi, const std::string& dependent = "u");

// (d_t - L_A) o M = M o (d_t - L_B) as operators.
bool splitting_check(const EvolutionEq& eq_a, const EvolutionEq& eq_b, const RatFun& phi);

struct DualDiagram
{
    EvolutionEq eq_b;
    EvolutionEq eq_a;      // DT[w0] image of eq_b
    EvolutionEq adjoint_a; // in a
    EvolutionEq adjoint_b; // in b
    RatFun w0;
    RatFun alpha0; // 1/w0
    // Filled only when alpha0 solves adjoint_a.
    std::optional<EvolutionEq> dual_image; // DT[alpha0] image of adjoint_a
    std::optional<EvolutionEq> twice_dual; // DT[w0] image of the adjoint of adjoint_b

    bool alpha0_solves = false; // leg "alpha0"
    bool dual_commutes = false; // leg "dual"
    bool twice_dual_ok = false; // leg "twice-dual"
    bool commutes() const noexcept { return alpha0_solves && dual_commutes && twice_dual_ok; }
};

// The dual Darboux diagram; legs that fail are reported, not thrown.
// Throws NotASolution if w0 does not solve eq_b.
DualDiagram dual_darboux_diagram(const EvolutionEq& eq_b, const RatFun& w0);
// As above; throws DiagramBroken naming the first failing leg.
DualDiagram dual_darboux_check(const EvolutionEq& eq_b, const RatFun& w0);

// beta = DT[1/w0](alpha~), a cosymmetry of eq_b. n even, eq_a the DT[w0]
// image of eq_b, alpha~ a cosymmetry of eq_a. Throws PreconditionError,
// NotACosymmetry.
RatFun characteristic_space_map(const EvolutionEq& eq_a, const EvolutionEq& eq_b, const RatFun& w0,
                                const RatFun& alpha_tilde);

} // namespace potframe

#endif // POTFRAME_DARBOUX_HPP
