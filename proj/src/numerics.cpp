#include "potframe/numerics.hpp"

#include "potframe/errors.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>

namespace potframe {

void GridSpec::validate() const
{
    if (!(length > 0) || !(dt > 0) || !(final_time > 0))
        throw PreconditionError("grid needs L > 0, dt > 0 and T > 0");
    if (points < 16 || points % 2 != 0)
        throw PreconditionError("grid needs an even number of points, at least 16");
    if (save_every < 1)
        throw PreconditionError("save_every must be at least 1");
}

namespace {

Eigen::VectorXd d1(const Eigen::VectorXd& u, double h)
{
    const Eigen::Index n = u.size();
    Eigen::VectorXd r(n);
    for (Eigen::Index j = 0; j < n; ++j)
        r[j] = (u[(j + 1) % n] - u[(j + n - 1) % n]) / (2 * h);
    return r;
}

Eigen::VectorXd d2(const Eigen::VectorXd& u, double h)
{
    const Eigen::Index n = u.size();
    Eigen::VectorXd r(n);
    for (Eigen::Index j = 0; j < n; ++j)
        r[j] = (u[(j + 1) % n] - 2 * u[j] + u[(j + n - 1) % n]) / (h * h);
    return r;
}

double to_double(const Rational& q)
{
    return q.get_d();
}

// A^i as functions of t only.
std::vector<RatFun> time_coefficients(const EvolutionEq& eq)
{
    for (int i = 0; i <= eq.order(); ++i)
        if (eq.coeff(i).depends_on_x())
            throw UnsupportedCoefficients("coefficient A^" + std::to_string(i) + " = " + eq.coeff(i).str() +
                                          " depends on x; only x-independent coefficients are supported");
    return eq.coeffs();
}

std::vector<double> eval_coefficients(const std::vector<RatFun>& a, double t)
{
    std::vector<double> out;
    out.reserve(a.size());
    for (const auto& c : a)
        out.push_back(to_double(c.eval(Rational(t), Rational(0))));
    return out;
}

Eigen::VectorXd rhs(const std::vector<double>& a, const Eigen::VectorXd& u, double h)
{
    Eigen::VectorXd out = Eigen::VectorXd::Zero(u.size());
    Eigen::VectorXd even = u; // D2^p u
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i > 0 && i % 2 == 0)
            even = d2(even, h);
        if (a[i] == 0)
            continue;
        out += a[i] * (i % 2 == 0 ? even : d1(even, h));
    }
    return out;
}

} // namespace

Eigen::VectorXd periodic_derivative(const Eigen::VectorXd& u, int k, double h)
{
    if (k < 0)
        throw PreconditionError("negative derivative order");
    Eigen::VectorXd r = u;
    for (int p = 0; p < k / 2; ++p)
        r = d2(r, h);
    return k % 2 == 1 ? d1(r, h) : r;
}

double stability_number(const EvolutionEq& eq, const GridSpec& grid, double t)
{
    grid.validate();
    const auto a = eval_coefficients(time_coefficients(eq), t);
    const double h = grid.dx();
    double radius = 0;
    for (int k = 0; k < grid.points; ++k) {
        const double theta = 2 * std::numbers::pi * k / grid.points;
        const std::complex<double> s1(0, std::sin(theta) / h);
        const double s2 = -4 * std::sin(theta / 2) * std::sin(theta / 2) / (h * h);
        std::complex<double> lambda = 0;
        std::complex<double> even = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i > 0 && i % 2 == 0)
                even *= s2;
            lambda += a[i] * (i % 2 == 0 ? even : even * s1);
        }
        radius = std::max(radius, std::abs(lambda));
    }
    return grid.dt * radius;
}

Trajectory solve_mol(const EvolutionEq& eq, const Eigen::VectorXd& initial, const GridSpec& grid)
{
    grid.validate();
    if (initial.size() != grid.points)
        throw PreconditionError("initial profile has " + std::to_string(initial.size()) + " samples, grid has " +
                                std::to_string(grid.points));
    const auto a = time_coefficients(eq);
    const double h = grid.dx();
    const double dt = grid.dt;

    Trajectory tr;
    tr.grid = grid;
    tr.stability_number = stability_number(eq, grid, 0.0);
    tr.times.push_back(0.0);
    tr.samples.push_back(initial);

    const double norm0 = initial.lpNorm<Eigen::Infinity>();
    const double limit = 1e6 * (norm0 > 0 ? norm0 : 1.0);
    const auto steps = static_cast<std::size_t>(std::llround(grid.final_time / dt));
    Eigen::VectorXd u = initial;
    for (std::size_t s = 1; s <= steps; ++s) {
        const double t = (s - 1) * dt;
        const auto a0 = eval_coefficients(a, t);
        const auto ah = eval_coefficients(a, t + dt / 2);
        const auto a1 = eval_coefficients(a, t + dt);
        const Eigen::VectorXd k1 = rhs(a0, u, h);
        const Eigen::VectorXd k2 = rhs(ah, u + (dt / 2) * k1, h);
        const Eigen::VectorXd k3 = rhs(ah, u + (dt / 2) * k2, h);
        const Eigen::VectorXd k4 = rhs(a1, u + dt * k3, h);
        u += (dt / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
        const double norm = u.lpNorm<Eigen::Infinity>();
        if (!std::isfinite(norm) || norm > limit)
            throw InstabilityDetected(s, s * dt);
        if (s % static_cast<std::size_t>(grid.save_every) == 0 || s == steps) {
            tr.times.push_back(s * dt);
            tr.samples.push_back(u);
        }
    }
    return tr;
}

Trajectory solve_mol(const EvolutionEq& eq, const std::function<double(double)>& initial, const GridSpec& grid)
{
    grid.validate();
    Eigen::VectorXd u0(grid.points);
    for (int j = 0; j < grid.points; ++j)
        u0[j] = initial(j * grid.dx());
    return solve_mol(eq, u0, grid);
}

Trajectory solve_mol(const EvolutionEq& eq, const RatFun& initial, const GridSpec& grid)
{
    return solve_mol(eq, [&](double x) { return to_double(initial.eval(Rational(0), Rational(x))); }, grid);
}

double integrate_density(const JetPoly& f, const std::string& dependent, const Eigen::VectorXd& u, double h, double t)
{
    std::map<int, Eigen::VectorXd> jets;
    Eigen::VectorXd density = Eigen::VectorXd::Zero(u.size());
    for (const auto& [m, c] : f.terms()) {
        if (c.depends_on_x())
            throw IncompatibleDensity("coefficient " + c.str() + " depends on x");
        Eigen::VectorXd term = Eigen::VectorXd::Constant(u.size(), to_double(c.eval(Rational(t), Rational(0))));
        for (const auto& [v, e] : m) {
            if (v.dep != dependent || v.t_order != 0)
                throw IncompatibleDensity("density involves " + v.str() + ", only x-jets of " + dependent +
                                          " are available");
            auto it = jets.find(v.x_order);
            if (it == jets.end())
                it = jets.emplace(v.x_order, periodic_derivative(u, v.x_order, h)).first;
            for (int k = 0; k < e; ++k)
                term = term.cwiseProduct(it->second);
        }
        density += term;
    }
    // Periodic trapezoid rule.
    return h * density.sum();
}

std::vector<double> functional_series(const Trajectory& traj, const JetPoly& f, const std::string& dependent)
{
    std::vector<double> out;
    out.reserve(traj.samples.size());
    for (std::size_t i = 0; i < traj.samples.size(); ++i)
        out.push_back(integrate_density(f, dependent, traj.samples[i], traj.grid.dx(), traj.times[i]));
    return out;
}

double functional_drift(const Trajectory& traj, const JetPoly& f, const std::string& dependent)
{
    const auto series = functional_series(traj, f, dependent);
    if (series.empty())
        return 0;
    double worst = 0;
    for (double v : series)
        worst = std::max(worst, std::abs(v - series.front()));
    return worst / std::max(std::abs(series.front()), 1e-12);
}

} // namespace potframe
