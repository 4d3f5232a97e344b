#ifndef STEEPFRONT_ANALYSIS_HPP
#define STEEPFRONT_ANALYSIS_HPP

#include <functional>
#include <optional>

#include "steepfront/conjsolver.hpp"
#include "steepfront/series.hpp"
#include "steepfront/transform.hpp"

namespace steepfront {

enum class FitKind { Power, Exponential };

struct FitWindow {
    double t_start = 0.0;
    double t_end = 0.0;
};

struct RateFit {
    FitKind kind = FitKind::Power;
    double exponent = 0.0;  // power exponent, or the exponential rate
    double amplitude = 0.0;
    FitWindow window;
    double rms_residual = 0.0;
    std::optional<double> target; // predicted value, when one exists
};

/// Least-squares slope of log y against log t over the window. When an
/// origin is supplied the abscissa is log(origin - t) instead, for decays
/// pinned to a finite final time. Needs at least 8 window samples, all
/// positive.
RateFit fit_power(const Series& series, FitWindow window,
                  std::optional<double> origin = std::nullopt);

/// Least-squares slope of log y against t over the window.
RateFit fit_exponential(const Series& series, FitWindow window);

/// Default fit window: the final 40% of the sampled range in log-time. For
/// extinction runs the last 3 samples are dropped first (near-threshold
/// noise).
FitWindow default_fit_window(const Series& series, bool extinction_run = false);

struct ExtinctionEstimate {
    double t_est = 0.0;
    RateFit half_width_fit; // exponent of the half-width in (T - t)
};

/// Extinction time from the max-slope series ((max w)^{1-q} is asymptotically
/// linear in t), plus the (T-t)-exponent of the interface half-width fitted
/// over the decade (T-t) in [T/20, T/2]. Requires 0 < q < 1 and a decaying
/// trajectory.
ExtinctionEstimate estimate_extinction(const Trajectory& traj, double q);

/// Largest pointwise violation of the ordering upper >= lower across the
/// shared output states. Trajectories must share grid and output times.
double check_ordering(const Trajectory& upper, const Trajectory& lower);

struct ErrorNorms {
    double l_inf = 0.0;
    double l1 = 0.0;
};

/// Max and trapezoidal integral of |u - reference(x)| over the frame samples.
ErrorNorms error_norms(const SolutionFrame& frame,
                       const std::function<double(double)>& reference);

/// Log-log slope of u against the distance to an interface, over frame
/// samples with u (or 1-u) inside [level_min, level_max]. Measures the
/// endpoint structure of a profile.
RateFit fit_endpoint_exponent(const SolutionFrame& frame, bool left_side, double level_min,
                              double level_max);

} // namespace steepfront

#endif
