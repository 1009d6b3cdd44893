#ifndef POTFRAME_CONSLAW_HPP
#define POTFRAME_CONSLAW_HPP

#include "potframe/diffop.hpp"
#include "potframe/jet.hpp"
#include "potframe/ratfun.hpp"

#include <string>
#include <vector>

namespace potframe {

/// Linear evolution equation d_t = sum_{i=0}^n A^i d_i of order n >= 2.
class EvolutionEq
{
public:
    // coeffs = A^0..A^n. Throws LeadingCoefficientZero / PreconditionError.
    EvolutionEq(std::string dependent, std::vector<RatFun> coeffs);
    EvolutionEq(std::string dependent, const XDiffOp& rhs_operator)
        : EvolutionEq(std::move(dependent), rhs_operator.coeffs())
    {}

    const std::string& dependent() const noexcept { return dep_; }
    int order() const noexcept { return static_cast<int>(a_.size()) - 1; }
    const std::vector<RatFun>& coeffs() const noexcept { return a_; }
    const RatFun& coeff(int i) const { return a_.at(static_cast<std::size_t>(i)); }
    bool is_even() const noexcept { return order() % 2 == 0; }

    XDiffOp op() const { return XDiffOp(a_); }
    // sum A^i d_i as a jet polynomial.
    JetPoly rhs() const;
    EvolutionEq renamed(std::string dependent) const { return EvolutionEq(std::move(dependent), a_); }

    std::string str() const;

    friend bool operator==(const EvolutionEq&, const EvolutionEq&) = default;

private:
    std::string dep_;
    std::vector<RatFun> a_;
};

JetPoly total_t_onshell(const JetPoly& p, const EvolutionEq& eq);

// alpha_t = -sum (-1)^i (A^i alpha)_i in evolution form.
EvolutionEq adjoint_equation(const EvolutionEq& eq, std::string dependent = "a");

// alpha_t + sum (-1)^i (A^i alpha)_i
RatFun adjoint_residual(const EvolutionEq& eq, const RatFun& alpha);
bool is_cosymmetry(const EvolutionEq& eq, const RatFun& alpha);

// sigma^0..sigma^{n-1} from sigma^{n-1} = -alpha A^n, sigma^i = -alpha A^{i+1} - sigma^{i+1}_x.
std::vector<RatFun> sigma(const EvolutionEq& eq, const RatFun& alpha);

/// Cosymmetry alpha(t, x) of an equation; construction validates the adjoint equation.
class LinearCharacteristic
{
public:
    LinearCharacteristic(const EvolutionEq& eq, RatFun alpha); // throws NotACosymmetry
    const RatFun& alpha() const noexcept { return alpha_; }

private:
    RatFun alpha_;
};

/// Self-adjoint operator Gamma with gamma = Gamma w a characteristic of a
/// quadratic conservation law.
class QuadraticCharacteristic
{
public:
    QuadraticCharacteristic(const EvolutionEq& eq, XDiffOp gamma); // throws NotACharacteristic
    const XDiffOp& gamma() const noexcept { return gamma_; }

private:
    XDiffOp gamma_;
};

/// (F, G) with D_t F + D_x G = 0 on solutions of eq; checked on construction.
class ConservedVector
{
public:
    ConservedVector(JetPoly density, JetPoly flux, EvolutionEq eq);

    const JetPoly& density() const noexcept { return f_; }
    const JetPoly& flux() const noexcept { return g_; }
    const EvolutionEq& equation() const noexcept { return eq_; }

private:
    JetPoly f_;
    JetPoly g_;
    EvolutionEq eq_;
};

// D_t F + D_x G evaluated on solutions.
JetPoly onshell_divergence(const JetPoly& density, const JetPoly& flux, const EvolutionEq& eq);

// F = alpha u, G = sum sigma^i u_i. Throws NotACosymmetry.
ConservedVector canonical_cv(const EvolutionEq& eq, const RatFun& alpha);

struct DivergenceIdentity
{
    JetPoly divergence; // D_t F + D_x G on the free jet space
    JetPoly expected;   // alpha (u_t - sum A^i u_i) + u * adjoint residual
    bool holds = false;
};

// Off-shell characteristic identity of the canonical vector, for any alpha != 0.
DivergenceIdentity divergence_identity(const EvolutionEq& eq, const RatFun& alpha);

// Gamma_t + Gamma o L + L^dagger o Gamma.
XDiffOp quadratic_characteristic_residual(const EvolutionEq& eq, const XDiffOp& gamma);
// Operator route: Gamma self-adjoint and the residual above vanishes.
bool is_quadratic_characteristic(const EvolutionEq& eq, const XDiffOp& gamma);
// Euler route: E_w[(Gamma w)(w_t - sum A^i w_i)] = 0 on the free jet space.
bool is_quadratic_characteristic_euler(const EvolutionEq& eq, const XDiffOp& gamma);

// F = w Gamma w / 2, G = -D_x^{-1} D_t F. Throws NotACharacteristic.
ConservedVector quadratic_cv(const EvolutionEq& eq, const XDiffOp& gamma);

} // namespace potframe

#endif // POTFRAME_CONSLAW_HPP
