#ifndef POTFRAME_JET_HPP
#define POTFRAME_JET_HPP

#include "potframe/ratfun.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace potframe {

/// Jet coordinate d_{t^i x^j}: derivative of dependent `dep`, i times in t and j times in x.
struct JetVar
{
    std::string dep;
    int t_order = 0;
    int x_order = 0;

    JetVar dx(int k = 1) const { return {dep, t_order, x_order + k}; }
    JetVar dt(int k = 1) const { return {dep, t_order + k, x_order}; }

    // u, u_x, u_txx: t's first, then x's.
    std::string str() const;

    friend auto operator<=>(const JetVar&, const JetVar&) = default;
    friend bool operator==(const JetVar&, const JetVar&) = default;
};

// Product of jet-variable powers, sorted by variable, exponents positive.
using JetMonomial = std::vector<std::pair<JetVar, int>>;

// Monomials of higher degree first, then by highest variable.
struct JetMonomialOrder
{
    bool operator()(const JetMonomial& a, const JetMonomial& b) const;
};

/// Differential polynomial over Q(t, x) in finitely many jet coordinates.
class JetPoly
{
public:
    using Terms = std::map<JetMonomial, RatFun, JetMonomialOrder>;

    JetPoly() = default;
    JetPoly(const RatFun& c);
    JetPoly(long c) : JetPoly(RatFun(c)) {}
    JetPoly(int c) : JetPoly(RatFun(c)) {}

    static JetPoly var(const JetVar& v);
    static JetPoly var(const std::string& dep, int t_order = 0, int x_order = 0)
    {
        return var(JetVar{dep, t_order, x_order});
    }
    static JetPoly term(const RatFun& c, JetMonomial m);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_jet_free() const noexcept;
    // Coefficient of the empty monomial.
    RatFun jet_free_part() const;

    std::set<JetVar> variables() const;
    std::set<std::string> dependents() const;
    bool contains(const JetVar& v) const;
    int degree_in(const JetVar& v) const;
    // Sum of the terms containing exactly v^e, with v^e removed.
    JetPoly coefficient(const JetVar& v, int e) const;
    // Partial derivative with respect to one jet coordinate.
    JetPoly partial(const JetVar& v) const;

    JetPoly& operator+=(const JetPoly& o);
    JetPoly& operator-=(const JetPoly& o);
    JetPoly& operator*=(const JetPoly& o);
    JetPoly& operator*=(const RatFun& c);
    JetPoly operator-() const;

    friend JetPoly operator+(JetPoly a, const JetPoly& b) { return a += b; }
    friend JetPoly operator-(JetPoly a, const JetPoly& b) { return a -= b; }
    friend JetPoly operator*(const JetPoly& a, const JetPoly& b);
    friend JetPoly operator*(JetPoly a, const RatFun& c) { return a *= c; }
    friend JetPoly operator*(const RatFun& c, JetPoly a) { return a *= c; }
    // Throws DivisionByZero.
    friend JetPoly operator/(JetPoly a, const RatFun& c) { return a *= RatFun(1) / c; }
    friend bool operator==(const JetPoly& a, const JetPoly& b) { return a.terms_ == b.terms_; }

    JetPoly pow(unsigned k) const;

    std::string str() const;

    void add_term(const JetMonomial& m, const RatFun& c);

private:
    Terms terms_;
};

JetMonomial monomial_multiply(const JetMonomial& a, const JetMonomial& b);

// Evolution rules d -> right-hand side of d_t, in x-jets only.
using EvolutionRules = std::map<std::string, JetPoly>;

JetPoly total_x(const JetPoly& p);
JetPoly total_x(const JetPoly& p, int k);
// D_t on the free jet space: (d, i, j) -> (d, i+1, j).
JetPoly total_t_free(const JetPoly& p);
// D_t on solutions: d_x^j of each ruled dependent is replaced by D_x^j of its rule.
// Throws MissingEquation for unruled dependents, PreconditionError for t-jets.
JetPoly total_t_onshell(const JetPoly& p, const EvolutionRules& rules);

// Variational derivative with respect to `dep` on the free jet space.
JetPoly euler(const JetPoly& p, const std::string& dep);

// q with D_x q = p and no additive term depending on t alone.
// Throws NotADivergence carrying the leftover when p is not in the image of D_x.
JetPoly integrate_x(const JetPoly& p);

// Antiderivative in x of a rational function, when one exists in Q(t, x).
// Throws NotADivergence when the integral has a logarithmic part.
RatFun integrate_rational_x(const RatFun& f);

// c_0..c_k when p = sum c_i dep_{x^i} exactly; nothing when p has other
// dependents, t-jets, nonlinear or jet-free terms.
std::optional<std::vector<RatFun>> linear_coefficients(const JetPoly& p, const std::string& dep);

using SubstitutionRules = std::map<JetVar, JetPoly>;

// Rewrites ruled coordinates until none remain. With close_under_dx a rule for
// d_{x^k} also rewrites d_{x^j}, j > k, by D_x^{j-k} of its right-hand side.
JetPoly substitute(const JetPoly& p, const SubstitutionRules& rules, bool close_under_dx);

} // namespace potframe

#endif // POTFRAME_JET_HPP
