#ifndef STEEPFRONT_TRANSFORM_HPP
#define STEEPFRONT_TRANSFORM_HPP

#include <vector>

#include "steepfront/conjsolver.hpp"

namespace steepfront {

/// A strictly increasing intensity profile u0(x) with u0(a) = 0, u0(b) = 1,
/// given as ordered samples. The sampled slope must stay positive; flat
/// stretches are rejected at construction.
class MonotoneProfile {
public:
    MonotoneProfile(std::vector<double> x, std::vector<double> u);

    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& u() const { return u_; }
    double a() const { return x_.front(); }
    double b() const { return x_.back(); }
    /// Smallest divided difference of u over x.
    double min_slope() const { return min_slope_; }

    /// Piecewise-linear evaluation of u at xx (clamped to [a, b]).
    double value(double xx) const;
    /// Piecewise-linear evaluation of the inverse x(u), u in [0, 1].
    double inverse(double uu) const;

private:
    std::vector<double> x_, u_;
    double min_slope_ = 0.0;
};

/// A physical-space profile u(x, t) between its two interfaces.
struct SolutionFrame {
    double t = 0.0;
    std::vector<double> x;
    std::vector<double> u;
    double l = 0.0;        // left interface
    double r = 0.0;        // right interface
    double center_c = 0.0; // x at u = 1/2
};

/// Invert the profile onto the conjugate grid: x0(u_i) = u0^{-1}(u_i).
ConjugateState conj_initial_data(const MonotoneProfile& profile, const ConjGrid& grid);

/// Read a conjugate state back as a physical profile (the state's x values
/// against the grid levels u). Requires a monotone state.
SolutionFrame reconstruct(const ConjugateState& state);

/// Gradient samples v = 1/w at the face midpoints. Faces with w = 0 are a
/// singularity of the inversion and raise IntegrityError with the location;
/// the diverging boundary limit itself never appears since only faces
/// strictly inside (0, 1) exist on the grid.
struct GradientSample {
    double x = 0.0; // midpoint of the face in physical space
    double u = 0.0; // face level
    double v = 0.0; // gradient = reciprocal face slope
};
std::vector<GradientSample> gradient_profile(const ConjugateState& state);

/// Largest gap between the profile and its grid roundtrip (invert onto the
/// grid, read back), measured along x at each sample's level. Second order
/// in the grid spacing, uniformly up to the interfaces.
double roundtrip_residual(const MonotoneProfile& profile, const ConjGrid& grid);

} // namespace steepfront

#endif
