#ifndef POTFRAME_KDV_EXAMPLE_HPP
#define POTFRAME_KDV_EXAMPLE_HPP

// The linear KdV equation w_t = w_xxx, its DT[x] image and the quadratic
// characteristics Gamma_ml w.

#include "potframe/darboux.hpp"
#include "potframe/potential.hpp"

#include <string>
#include <vector>

namespace potframe {

// D_x^m o (3t D_x^2 + x)^l o D_x^m. Throws PreconditionError for negative m, l.
XDiffOp gamma_ml(int m, int l);

struct GammaML
{
    int m = 0;
    int l = 0;
    XDiffOp op;

    GammaML(int m_, int l_) : m(m_), l(l_), op(gamma_ml(m_, l_)) {}
    int order() const noexcept { return op.order(); }
};

struct GammaCell
{
    int m = 0;
    int l = 0;
    RatFun gamma_psi;            // Gamma_ml applied to psi = x
    bool operator_test = false;  // Gamma_t + Gamma L + L^dagger Gamma = 0
    bool euler_test = false;     // Euler-operator route
    bool induced = false;        // Gamma psi = 0
    bool depends_on_v = false;   // reduced characteristic keeps v
    bool claimed_induced = false; // the stated rule: induced iff m >= 2
    bool discrepancy() const noexcept { return induced != claimed_induced; }
};

struct KdvReport
{
    EvolutionEq modified{"w", {RatFun(), RatFun(), RatFun(), RatFun(1)}};
    RatFun seed = RatFun::x();
    EvolutionEq image{"u", {RatFun(), RatFun(), RatFun(), RatFun(1)}};
    bool image_matches = false;
    bool modified_self_adjoint = false;
    bool image_self_adjoint = false;
    RatFun alpha;
    bool alpha_is_cosymmetry = false;
    JetPoly vx;
    JetPoly vt;
    bool potential_system_matches = false;
    bool potential_system_compatible = false;
    EvolutionEq recovered{"w", {RatFun(), RatFun(), RatFun(), RatFun(1)}}; // modified potential equation of (image, alpha)
    bool recovered_matches = false;
    bool diagram_commutes = false;
    int grid_max = 4;
    std::vector<GammaCell> grid;

    std::vector<const GammaCell*> discrepancies() const;
    bool all_verified() const;
};

KdvReport reproduce_kdv_example(int grid_max = 4);
std::string render_text(const KdvReport& r);

} // namespace potframe

#endif // POTFRAME_KDV_EXAMPLE_HPP
