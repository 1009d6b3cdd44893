#ifndef POTFRAME_POTENTIAL_HPP
#define POTFRAME_POTENTIAL_HPP

#include "potframe/conslaw.hpp"

#include <string>
#include <utility>
#include <vector>

namespace potframe {

// `base` unless it is taken, else base1, base2, ...
std::string fresh_name(const std::string& base, const std::vector<std::string>& taken);

/// v_x = alpha u, v_t = -sum sigma^i u_i for a cosymmetry alpha of eq.
struct PotentialSystem
{
    EvolutionEq equation;
    RatFun alpha;
    std::string potential;
    std::vector<RatFun> sigma; // sigma^0..sigma^{n-1}
    JetPoly vx;                // right side of the v_x relation
    JetPoly vt;                // right side of the v_t relation
};

// Throws NotACosymmetry.
PotentialSystem potential_system(const EvolutionEq& eq, const RatFun& alpha, const std::string& potential = "v");

// D_t(alpha u) - D_x(v_t relation) on solutions; zero for every valid system.
JetPoly compatibility_residual(const PotentialSystem& sys);

// v_t = -sum sigma^i (v_x / alpha)_i. Throws NotACosymmetry.
EvolutionEq potential_equation(const EvolutionEq& eq, const RatFun& alpha, const std::string& potential = "v");

/// Modified potential w = psi v, psi = 1/alpha.
struct ModifiedPotentialFrame
{
    EvolutionEq equation;
    RatFun alpha;
    RatFun psi;
    std::vector<RatFun> sigma;
    std::string potential; // w
    JetPoly wx;            // w_x = u + (psi_x/psi) w
    JetPoly wt;            // w_t = (psi_t/psi) w - psi sum sigma^i u_i
    EvolutionEq modified;  // w_t = sum B^i w_i

    const std::vector<RatFun>& b() const noexcept { return modified.coeffs(); }
};

// B^i by expanding -psi sum sigma^i (w_x - (psi_x/psi) w)_i + (psi_t/psi) w.
// Throws NotACosymmetry; std::logic_error if the frame identities fail.
ModifiedPotentialFrame modified_potential_frame(const EvolutionEq& eq, const RatFun& alpha,
                                                const std::string& potential = "w");
inline EvolutionEq modified_potential_equation(const EvolutionEq& eq, const RatFun& alpha,
                                               const std::string& potential = "w")
{
    return modified_potential_frame(eq, alpha, potential).modified;
}

// The identities B^n = A^n, B^{n-1} = A^{n-1} - A^n_x and "psi solves the modified equation".
struct FrameIdentities
{
    bool leading = false;
    bool subleading = false;
    bool psi_solves = false;
    bool all() const noexcept { return leading && subleading && psi_solves; }
};
FrameIdentities check_frame_identities(const ModifiedPotentialFrame& frame);

// (psi beta, psi sum_{i<n} (-D_x)^i (psi sigma^i beta)) for a cosymmetry beta
// of the modified potential equation. Throws NotACosymmetry.
std::pair<RatFun, RatFun> reduced_characteristic_linear(const EvolutionEq& eq, const RatFun& alpha,
                                                        const RatFun& beta);

struct DensityEquivalence
{
    RatFun beta; // alpha~_x - (alpha_x/alpha) alpha~
    JetPoly lhs; // beta w + alpha~ u with u = w_x - (psi_x/psi) w
    JetPoly rhs; // D_x(alpha~ w)
    bool holds = false;
};

// n even; alpha, alpha_tilde cosymmetries of eq. Throws NotACosymmetry, PreconditionError.
DensityEquivalence verify_density_equivalence(const EvolutionEq& eq, const RatFun& alpha, const RatFun& alpha_tilde);

struct QuadraticReduction
{
    std::string potential;           // v
    std::pair<JetPoly, JetPoly> raw; // psi Gamma(psi v), psi sum (-D_x)^i (psi sigma^i Gamma(psi v))
    std::pair<JetPoly, JetPoly> reduced;
    bool depends_on_v = false; // reduced form contains v itself
};

// n odd; Gamma a quadratic characteristic of the modified potential equation.
// v_k, k >= 1, are eliminated through v_x = alpha u. Throws PreconditionError,
// NotACosymmetry, NotACharacteristic.
QuadraticReduction reduced_characteristic_quadratic(const EvolutionEq& eq, const RatFun& alpha, const XDiffOp& gamma);

// Gamma psi = 0. Same preconditions as above.
bool is_induced_quadratic(const EvolutionEq& eq, const RatFun& alpha, const XDiffOp& gamma);

} // namespace potframe

#endif // POTFRAME_POTENTIAL_HPP
