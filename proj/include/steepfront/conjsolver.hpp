#ifndef STEEPFRONT_CONJSOLVER_HPP
#define STEEPFRONT_CONJSOLVER_HPP

#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "steepfront/error.hpp"
#include "steepfront/flux.hpp"
#include "steepfront/series.hpp"

namespace steepfront {

/// Uniform node grid on the conjugate domain [0, 1].
struct ConjGrid {
    int n_cells;

    explicit ConjGrid(int n);
    double spacing() const { return 1.0 / n_cells; }
    int n_nodes() const { return n_cells + 1; }
    double node(int i) const { return double(i) / n_cells; }
};

/// Sampled inverse profile x(u_i, t). x must stay nondecreasing; the face
/// slopes w_{i+1/2} = (x_{i+1} - x_i)/h are the conjugate gradient variable.
struct ConjugateState {
    double t = 0.0;
    double h = 0.0;
    std::vector<double> x;

    int n_faces() const { return static_cast<int>(x.size()) - 1; }
    double face_slope(int i) const { return (x[i + 1] - x[i]) / h; }
    std::vector<double> face_slopes() const;
    double max_face_slope() const;
    double min_face_slope() const;
};

/// Interface positions (l, r) = (x_0, x_N).
std::pair<double, double> interfaces(const ConjugateState& state);

/// Profile width r - l; equals the sum of face slopes times h by telescoping.
double mass(const ConjugateState& state);

struct SolveConfig {
    explicit SolveConfig(FluxLaw l) : law(std::move(l)) {}

    FluxLaw law; // conjugate flux driving x_t = (law(x_u))_u
    double dt_init = 1e-5;
    double dt_max = 1e-3;
    double epsilon = 1e-8;
    double newton_tol = 1e-10;
    int newton_max_iter = 25;
    std::vector<double> output_times;
    double extinction_threshold = 1e-6;
    /// Power exponent used to refine the extinction time estimate; filled
    /// automatically when the law is a power.
    std::optional<double> extinction_fit_exponent;
};

struct StepRecord {
    double t = 0.0;
    double left = 0.0;
    double right = 0.0;
    double width = 0.0;
    double max_slope = 0.0;
    double min_slope = 0.0;
};

struct ExtinctionRecord {
    double t_est = 0.0;
};

struct Trajectory {
    std::vector<ConjugateState> states; // at the requested output times
    std::vector<StepRecord> steps;      // every accepted step, t strictly increasing
    std::optional<ExtinctionRecord> extinction;

    Series left_series() const;
    Series right_series() const;
    Series half_width_series() const;
    Series mass_series() const;
    Series max_slope_series() const;
    Series min_slope_series() const;
};

/// Adaptive time stepping halved dt below 1e-14 without converging; the
/// work done so far is attached.
class StallError : public Error {
public:
    StallError(const std::string& msg, Trajectory partial)
        : Error(msg), partial_(std::make_shared<Trajectory>(std::move(partial))) {}
    const Trajectory& partial() const { return *partial_; }

private:
    std::shared_ptr<const Trajectory> partial_;
};

/// Sample x0 on the grid nodes; rejects decreasing data.
ConjugateState init_from_x0(const ConjGrid& grid, const std::function<double(double)>& x0);

/// One implicit Euler step of x_t = (psi_eps(x_u))_u with zero boundary
/// fluxes, solved by damped Newton on the tridiagonal system. Throws
/// StepFailure when Newton does not converge within the iteration budget.
ConjugateState step(const ConjugateState& state, double dt, const SolveConfig& cfg);

/// March to the last output time with adaptive dt (halve on step failure,
/// grow by 1.2 on success up to dt_max). Interfaces, width and slope
/// extrema are recorded at every accepted step; extinction is declared when
/// the largest face slope falls to the configured threshold, and the run
/// stops there.
Trajectory solve(const ConjGrid& grid, const std::function<double(double)>& x0,
                 const SolveConfig& cfg);

/// Same, starting from an existing state (t = 0 stamp required).
Trajectory solve(ConjugateState initial, const SolveConfig& cfg);

} // namespace steepfront

#endif
