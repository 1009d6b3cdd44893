#include "potframe/kdv_example.hpp"

#include "potframe/errors.hpp"

#include <sstream>

namespace potframe {

XDiffOp gamma_ml(int m, int l)
{
    if (m < 0 || l < 0)
        throw PreconditionError("gamma_ml needs m, l >= 0");
    const XDiffOp inner({RatFun::x(), RatFun(), RatFun(3) * RatFun::t()});
    const XDiffOp d = XDiffOp::dx(m);
    return compose(d, compose(power(inner, static_cast<unsigned>(l)), d));
}

std::vector<const GammaCell*> KdvReport::discrepancies() const
{
    std::vector<const GammaCell*> out;
    for (const auto& c : grid)
        if (c.discrepancy())
            out.push_back(&c);
    return out;
}

bool KdvReport::all_verified() const
{
    bool ok = image_matches && modified_self_adjoint && image_self_adjoint && alpha_is_cosymmetry &&
              potential_system_matches && potential_system_compatible && recovered_matches && diagram_commutes;
    for (const auto& c : grid)
        ok = ok && c.operator_test && c.euler_test && c.depends_on_v == !c.induced;
    return ok;
}

KdvReport reproduce_kdv_example(int grid_max)
{
    const RatFun x = RatFun::x();
    KdvReport r;
    r.grid_max = grid_max;
    r.image = dt_transform_equation(r.modified, r.seed, "u");
    r.image_matches = r.image.coeffs() == std::vector<RatFun>{RatFun(3) / x.pow(3), RatFun(-3) / x.pow(2), RatFun(), RatFun(1)};
    r.modified_self_adjoint = adjoint_equation(r.modified).coeffs() == r.modified.coeffs();
    r.image_self_adjoint = adjoint_equation(r.image).coeffs() == r.image.coeffs();

    r.alpha = RatFun(1) / r.seed;
    r.alpha_is_cosymmetry = is_cosymmetry(r.image, r.alpha);
    const PotentialSystem sys = potential_system(r.image, r.alpha);
    r.vx = sys.vx;
    r.vt = sys.vt;
    const JetPoly u = JetPoly::var("u");
    r.potential_system_matches =
        sys.vx == u / x &&
        sys.vt == JetPoly::var("u", 0, 2) / x + JetPoly::var("u", 0, 1) / x.pow(2) - u / x.pow(3);
    r.potential_system_compatible = compatibility_residual(sys).is_zero();
    r.recovered = modified_potential_equation(r.image, r.alpha);
    r.recovered_matches = r.recovered.coeffs() == r.modified.coeffs();
    r.diagram_commutes = dual_darboux_diagram(r.modified, r.seed).commutes();

    const RatFun psi = r.seed;
    for (int m = 0; m <= grid_max; ++m)
        for (int l = 0; l <= grid_max; ++l) {
            const XDiffOp g = gamma_ml(m, l);
            GammaCell c;
            c.m = m;
            c.l = l;
            c.gamma_psi = apply(g, psi);
            c.operator_test = is_quadratic_characteristic(r.modified, g);
            c.euler_test = is_quadratic_characteristic_euler(r.modified, g);
            c.induced = is_induced_quadratic(r.image, r.alpha, g);
            c.depends_on_v = reduced_characteristic_quadratic(r.image, r.alpha, g).depends_on_v;
            c.claimed_induced = m >= 2;
            r.grid.push_back(std::move(c));
        }
    return r;
}

namespace {

const char* yes_no(bool b)
{
    return b ? "yes" : "no";
}

} // namespace

std::string render_text(const KdvReport& r)
{
    std::ostringstream os;
    os << "modified potential equation: " << r.modified.str() << "\n";
    os << "seed: " << r.seed.str() << "\n";
    os << "DT[" << r.seed.str() << "] image: " << r.image.str() << "\n";
    os << "self-adjoint: " << r.modified.dependent() << " " << yes_no(r.modified_self_adjoint) << ", "
       << r.image.dependent() << " " << yes_no(r.image_self_adjoint) << "\n";
    os << "cosymmetry alpha = " << r.alpha.str() << ": " << yes_no(r.alpha_is_cosymmetry) << "\n";
    os << "potential system: v_x = " << r.vx.str() << ", v_t = " << r.vt.str() << "\n";
    os << "compatible: " << yes_no(r.potential_system_compatible) << "\n";
    os << "modified potential equation of the image: " << r.recovered.str() << "\n";
    os << "dual diagram commutes: " << yes_no(r.diagram_commutes) << "\n";
    os << "Gamma_ml psi, m,l = 0.." << r.grid_max << " (computed / claimed induced):\n";
    for (const auto& c : r.grid) {
        os << "  m=" << c.m << " l=" << c.l << ": Gamma psi = " << c.gamma_psi.str()
           << ", induced " << yes_no(c.induced) << " / " << yes_no(c.claimed_induced)
           << ", characteristic " << yes_no(c.operator_test && c.euler_test)
           << ", reduced depends on v " << yes_no(c.depends_on_v);
        if (c.discrepancy())
            os << "  [DISCREPANCY]";
        os << "\n";
    }
    const auto d = r.discrepancies();
    os << "discrepancies: " << d.size();
    for (const auto* c : d)
        os << " (" << c->m << "," << c->l << ")";
    os << "\n";
    return os.str();
}

} // namespace potframe
