#include "steepfront/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "steepfront/error.hpp"

namespace steepfront {

namespace {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms = 0.0;
};

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LinearFit f;
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) throw InsufficientDataError("degenerate abscissa in fit");
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ss += r * r;
    }
    f.rms = std::sqrt(ss / n);
    return f;
}

RateFit log_fit(const Series& series, FitWindow window, FitKind kind,
                std::optional<double> origin) {
    std::vector<double> xs, ys;
    xs.reserve(series.size());
    ys.reserve(series.size());
    for (std::size_t i = 0; i < series.size(); ++i) {
        const double t = series.t[i];
        if (t < window.t_start || t > window.t_end) continue;
        const double y = series.y[i];
        if (!(y > 0.0)) {
            throw DomainError("fit requires positive values; got " + std::to_string(y) +
                              " at t=" + std::to_string(t));
        }
        double abscissa = t;
        if (kind == FitKind::Power) {
            if (origin) {
                const double d = *origin - t;
                if (!(d > 0.0)) {
                    throw DomainError("origin-shifted fit needs t < origin in the window");
                }
                abscissa = std::log(d);
            } else {
                if (!(t > 0.0)) continue; // log t undefined at t = 0
                abscissa = std::log(t);
            }
        }
        xs.push_back(abscissa);
        ys.push_back(std::log(y));
    }
    if (xs.size() < 8) {
        throw InsufficientDataError("fit window holds " + std::to_string(xs.size()) +
                                    " samples; need at least 8");
    }
    const LinearFit lf = least_squares(xs, ys);
    RateFit out;
    out.kind = kind;
    out.exponent = lf.slope;
    out.amplitude = std::exp(lf.intercept);
    out.window = window;
    out.rms_residual = lf.rms;
    return out;
}

} // namespace

RateFit fit_power(const Series& series, FitWindow window, std::optional<double> origin) {
    return log_fit(series, window, FitKind::Power, origin);
}

RateFit fit_exponential(const Series& series, FitWindow window) {
    return log_fit(series, window, FitKind::Exponential, std::nullopt);
}

FitWindow default_fit_window(const Series& series, bool extinction_run) {
    if (series.size() < 8) throw InsufficientDataError("series too short for a fit window");
    std::size_t last = series.size() - 1;
    if (extinction_run) {
        if (last < 4) throw InsufficientDataError("extinction series too short");
        last -= 3;
    }
    const double t_end = series.t[last];
    double t_first = 0.0;
    for (std::size_t i = 0; i <= last; ++i) {
        if (series.t[i] > 0.0) {
            t_first = series.t[i];
            break;
        }
    }
    if (t_first <= 0.0 || t_end <= t_first) {
        throw InsufficientDataError("series lacks a positive time range");
    }
    FitWindow w;
    w.t_end = t_end;
    w.t_start = std::exp(std::log(t_first) + 0.6 * (std::log(t_end) - std::log(t_first)));
    return w;
}

ExtinctionEstimate estimate_extinction(const Trajectory& traj, double q) {
    if (!(q > 0.0) || q >= 1.0) {
        throw NotApplicableError("extinction estimates apply to 0 < q < 1 only (got q=" +
                                 std::to_string(q) + ")");
    }
    const Series wmax = traj.max_slope_series();
    if (wmax.size() < 8) throw InsufficientDataError("trajectory too short");
    if (!traj.extinction) {
        // accept a decaying tail: require an order-of-magnitude drop
        const double head = wmax.y.front();
        const double tail = wmax.y.back();
        if (!(tail < 0.1 * head)) {
            throw NotApplicableError("trajectory shows no extinction and no decaying tail");
        }
    }
    // linear fit of (max w)^{1-q} in t over the final decade of max w
    double w_floor = 0.0;
    for (std::size_t i = wmax.size(); i-- > 0;) {
        if (wmax.y[i] > 0.0) {
            w_floor = wmax.y[i];
            break;
        }
    }
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < wmax.size(); ++i) {
        if (wmax.y[i] >= w_floor && wmax.y[i] <= 10.0 * w_floor) {
            xs.push_back(wmax.t[i]);
            ys.push_back(std::pow(wmax.y[i], 1.0 - q));
        }
    }
    if (xs.size() < 2) throw InsufficientDataError("too few samples near extinction");
    const LinearFit lf = least_squares(xs, ys);
    if (!(lf.slope < 0.0)) throw NotApplicableError("max-slope series is not decaying");
    ExtinctionEstimate est;
    est.t_est = -lf.intercept / lf.slope;

    // half-width exponent in (T - t), fitted over the decade clear of both
    // the initial transient and the resolution floor at extinction
    FitWindow window;
    window.t_start = est.t_est * 0.5;
    window.t_end = est.t_est * 0.95;
    est.half_width_fit = fit_power(traj.half_width_series(), window, est.t_est);
    est.half_width_fit.target = 1.0 / (1.0 - q);
    return est;
}

double check_ordering(const Trajectory& upper, const Trajectory& lower) {
    if (upper.states.size() != lower.states.size()) {
        throw ConfigError("ordering check needs matching output times");
    }
    double violation = 0.0;
    for (std::size_t k = 0; k < upper.states.size(); ++k) {
        const auto& a = upper.states[k];
        const auto& b = lower.states[k];
        if (a.x.size() != b.x.size() || a.t != b.t) {
            throw ConfigError("ordering check needs matching grids and output times");
        }
        for (std::size_t i = 0; i < a.x.size(); ++i) {
            violation = std::max(violation, b.x[i] - a.x[i]);
        }
    }
    return std::max(violation, 0.0);
}

ErrorNorms error_norms(const SolutionFrame& frame,
                       const std::function<double(double)>& reference) {
    ErrorNorms n;
    std::vector<double> diff(frame.x.size());
    for (std::size_t i = 0; i < frame.x.size(); ++i) {
        diff[i] = std::abs(frame.u[i] - reference(frame.x[i]));
        n.l_inf = std::max(n.l_inf, diff[i]);
    }
    for (std::size_t i = 0; i + 1 < frame.x.size(); ++i) {
        n.l1 += 0.5 * (diff[i] + diff[i + 1]) * (frame.x[i + 1] - frame.x[i]);
    }
    return n;
}

RateFit fit_endpoint_exponent(const SolutionFrame& frame, bool left_side, double level_min,
                              double level_max) {
    Series s; // distance as "t", level as "y"
    for (std::size_t i = 0; i < frame.x.size(); ++i) {
        const double level = left_side ? frame.u[i] : 1.0 - frame.u[i];
        const double d = left_side ? frame.x[i] - frame.l : frame.r - frame.x[i];
        if (level >= level_min && level <= level_max && d > 0.0) {
            s.push(d, level);
        }
    }
    if (s.size() < 8) {
        throw InsufficientDataError("too few samples between the requested levels");
    }
    const auto [dmin, dmax] = std::minmax_element(s.t.begin(), s.t.end());
    return fit_power(s, FitWindow{*dmin, *dmax});
}

} // namespace steepfront
