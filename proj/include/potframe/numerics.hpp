#ifndef POTFRAME_NUMERICS_HPP
#define POTFRAME_NUMERICS_HPP

// Method of lines on a periodic grid: RK4 in time, second-order central
// differences in x. Floating point only.

#include "potframe/conslaw.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace potframe {

struct GridSpec
{
    double length = 6.283185307179586;
    int points = 256;
    double dt = 1e-4;
    double final_time = 1.0;
    int save_every = 1; // keep every k-th step (the last step is always kept)

    double dx() const { return length / points; }
    // Throws PreconditionError: L, dt, T > 0, N >= 16 and even, save_every >= 1.
    void validate() const;
};

// RK4 is stable for dt * |lambda| up to about this on both axes.
constexpr double rk4_stability_limit = 2.78;

struct Trajectory
{
    GridSpec grid;
    std::vector<double> times;
    std::vector<Eigen::VectorXd> samples;
    double stability_number = 0; // dt * spectral radius of the stencil operator at t = 0
};

// Periodic stencil approximation of d_x^k: D2^(k/2), times D1 for odd k.
Eigen::VectorXd periodic_derivative(const Eigen::VectorXd& u, int k, double h);

// dt * max over grid modes of |sum A^i(t) symbol_i|. Throws UnsupportedCoefficients.
double stability_number(const EvolutionEq& eq, const GridSpec& grid, double t = 0.0);

// Throws UnsupportedCoefficients when some A^i depends on x, InstabilityDetected
// when the max norm exceeds 1e6 times its initial value.
Trajectory solve_mol(const EvolutionEq& eq, const Eigen::VectorXd& initial, const GridSpec& grid);
Trajectory solve_mol(const EvolutionEq& eq, const std::function<double(double)>& initial, const GridSpec& grid);
// Samples a rational profile; PoleError if it has a pole on the grid.
Trajectory solve_mol(const EvolutionEq& eq, const RatFun& initial, const GridSpec& grid);

// Trapezoid rule for the integral of F over one period, jets by the same stencils.
// F may only involve x-jets of `dependent`, with coefficients constant in x.
// Throws IncompatibleDensity.
double integrate_density(const JetPoly& f, const std::string& dependent, const Eigen::VectorXd& u, double h,
                         double t = 0.0);
std::vector<double> functional_series(const Trajectory& traj, const JetPoly& f, const std::string& dependent);

// max_t |I(t) - I(0)| / max(|I(0)|, 1e-12)
double functional_drift(const Trajectory& traj, const JetPoly& f, const std::string& dependent);

} // namespace potframe

#endif // POTFRAME_NUMERICS_HPP
