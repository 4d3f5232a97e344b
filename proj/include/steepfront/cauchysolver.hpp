#ifndef STEEPFRONT_CAUCHYSOLVER_HPP
#define STEEPFRONT_CAUCHYSOLVER_HPP

#include <string>
#include <vector>

#include "steepfront/conjsolver.hpp" // SolveConfig
#include "steepfront/flux.hpp"
#include "steepfront/series.hpp"
#include "steepfront/transform.hpp"

namespace steepfront {

/// Uniform cell-centered grid on a truncated line.
struct LineGrid {
    double x_min;
    double x_max;
    int n_cells;

    LineGrid(double a, double b, int n);
    double spacing() const { return (x_max - x_min) / n_cells; }
    double center(int i) const { return x_min + (i + 0.5) * spacing(); }
};

/// Nonnegative cell averages of the gradient variable.
struct LineState {
    double t = 0.0;
    std::vector<double> v;
};

struct LineStepRecord {
    double t = 0.0;
    double sup = 0.0;
    double mass = 0.0;
    double support_left = 0.0;
    double support_right = 0.0;
};

struct LineTrajectory {
    LineGrid grid;
    std::vector<LineState> states; // at the requested output times
    std::vector<LineStepRecord> steps;
    std::vector<std::string> warnings;

    Series sup_series() const;
    Series mass_series() const;
    Series support_radius_series() const;
};

/// Conservative implicit-Euler evolution of the dispersive line problem
/// with zero far-field fluxes. Power laws require exponent m > -1 (no
/// finite-mass solutions exist otherwise); initial data must be
/// nonnegative. A warning is recorded when the domain is too tight for the
/// predicted spread at the final output time.
LineTrajectory solve_line(const LineGrid& grid, std::vector<double> v0, const FluxLaw& law,
                          const SolveConfig& cfg);

/// Cumulative integral of the state: u at the right cell edges, rising from
/// 0 at x_min to the total mass at x_max. Interfaces of the frame are the
/// numerical support bounds (cells above 1e-12).
SolutionFrame integrate_to_u(const LineGrid& grid, const LineState& state);

/// Largest relative deviation of the recorded mass from its initial value.
double check_mass_conservation(const LineTrajectory& traj);

} // namespace steepfront

#endif
