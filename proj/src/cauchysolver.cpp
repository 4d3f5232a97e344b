#include "steepfront/cauchysolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steepfront/error.hpp"

namespace steepfront {

LineGrid::LineGrid(double a, double b, int n) : x_min(a), x_max(b), n_cells(n) {
    if (!(a < b)) throw DomainError("line grid needs x_min < x_max");
    if (n < 2) throw DomainError("line grid needs at least 2 cells");
}

namespace {

constexpr double kSupportCutoff = 1e-12;

// Odd extension of the flux for Newton robustness around v = 0. Laws that
// are singular there (power m <= 0) get the same shifted regularization as
// the conjugate solver.
struct LineFlux {
    const FluxLaw& law;
    double delta;
    bool shifted;
    double value_at_delta = 0.0;
    double slope_at_delta = 0.0;

    LineFlux(const FluxLaw& l, double d) : law(l), delta(d) {
        const auto* p = l.as_power();
        shifted = p != nullptr && p->m <= 0.0;
        if (shifted) {
            value_at_delta = l.flux(delta);
            slope_at_delta = l.diffusivity(delta);
        }
    }

    double value(double v) const {
        const double s = std::abs(v);
        if (s == 0.0) return 0.0;
        double mag;
        if (shifted) {
            mag = law.flux(s + delta) - value_at_delta;
        } else {
            mag = law.flux(s);
        }
        return v < 0.0 ? -mag : mag;
    }
    double slope(double v) const {
        const double s = std::abs(v);
        if (shifted) return law.diffusivity(s + delta);
        if (s == 0.0) {
            // one-sided value; fine for the tridiagonal Jacobian
            return law.diffusivity(kSupportCutoff);
        }
        return law.diffusivity(s);
    }
};

void solve_tridiagonal(std::vector<double>& lower, std::vector<double>& diag,
                       std::vector<double>& upper, std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 1; i < n; ++i) {
        const double m = lower[i] / diag[i - 1];
        diag[i] -= m * upper[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
    }
}

// Discrete divergence of the flux differences with zero ghost fluxes.
void flux_divergence(const std::vector<double>& p, double h2, std::vector<double>& out) {
    const std::size_t n = p.size();
    out.resize(n);
    out[0] = (p[1] - p[0]) / h2;
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (p[i + 1] - 2.0 * p[i] + p[i - 1]) / h2;
    out[n - 1] = (p[n - 2] - p[n - 1]) / h2;
}

struct LineWorkspace {
    std::vector<double> y, pot, div, resid, lower, diag, upper;
};

LineStepRecord make_record(const LineGrid& grid, const LineState& s) {
    LineStepRecord r;
    r.t = s.t;
    r.sup = *std::max_element(s.v.begin(), s.v.end());
    double m = 0.0;
    for (double v : s.v) m += v;
    r.mass = m * grid.spacing();
    r.support_left = grid.x_max;
    r.support_right = grid.x_min;
    for (std::size_t i = 0; i < s.v.size(); ++i) {
        if (s.v[i] > kSupportCutoff) {
            r.support_left = std::min(r.support_left, grid.center(static_cast<int>(i)));
            r.support_right = std::max(r.support_right, grid.center(static_cast<int>(i)));
        }
    }
    if (r.support_left > r.support_right) {
        r.support_left = r.support_right = 0.5 * (grid.x_min + grid.x_max);
    }
    return r;
}

} // namespace

LineTrajectory solve_line(const LineGrid& grid, std::vector<double> v0, const FluxLaw& law,
                          const SolveConfig& cfg) {
    if (const auto* p = law.as_power()) {
        if (p->m <= -1.0) {
            throw DomainError("no finite-mass line solutions exist for power exponent m <= -1 "
                              "(got m=" + std::to_string(p->m) + ")");
        }
    }
    if (static_cast<int>(v0.size()) != grid.n_cells) {
        throw DomainError("initial data size must match the cell count");
    }
    for (std::size_t i = 0; i < v0.size(); ++i) {
        if (v0[i] < 0.0) {
            throw DomainError("initial data must be nonnegative (cell " + std::to_string(i) +
                              "); sign-changing gradients are outside this problem class");
        }
    }
    if (cfg.output_times.empty()) throw ConfigError("output_times must not be empty");
    for (std::size_t i = 0; i < cfg.output_times.size(); ++i) {
        if (cfg.output_times[i] < 0.0 ||
            (i > 0 && cfg.output_times[i] <= cfg.output_times[i - 1])) {
            throw ConfigError("output_times must be nonnegative and strictly increasing");
        }
    }

    LineTrajectory traj{grid, {}, {}, {}, };
    LineState state{0.0, std::move(v0)};
    const double h = grid.spacing();
    const double h2 = h * h;
    const LineFlux fl(law, cfg.epsilon > 0.0 ? cfg.epsilon : 1e-8);

    // domain-tightness warning: data support padded by 5x the predicted
    // self-similar radius at the final time must fit
    {
        const double t_final = cfg.output_times.back();
        double radius = 0.0;
        if (const auto* p = law.as_power()) {
            const double m = p->m;
            const double gamma = 1.0 / (m + 1.0);
            // source-solution support radius for m > 1 is ~2 (t/m)^gamma for
            // unit mass; for m <= 1 use the spread scale t^gamma
            radius = (m > 1.0) ? 2.0 * std::pow(std::max(t_final, 1.0) / m, gamma)
                               : std::pow(std::max(t_final, 1.0), gamma);
        }
        const auto rec0 = make_record(grid, state);
        if (radius > 0.0 &&
            (rec0.support_right + 5.0 * radius > grid.x_max ||
             rec0.support_left - 5.0 * radius < grid.x_min)) {
            traj.warnings.push_back(
                "domain may be too tight: data support plus 5x the predicted spread radius (" +
                std::to_string(radius) + ") exceeds the grid; far-field truncation can "
                "distort the solution");
        }
    }

    traj.steps.push_back(make_record(grid, state));
    std::size_t out_idx = 0;
    if (cfg.output_times[0] == 0.0) {
        traj.states.push_back(state);
        ++out_idx;
    }

    LineWorkspace ws;
    const std::size_t n = state.v.size();
    auto potentials = [&](const std::vector<double>& v, std::vector<double>& pot) {
        pot.resize(n);
        for (std::size_t i = 0; i < n; ++i) pot[i] = fl.value(v[i]);
    };
    auto residual = [&](const std::vector<double>& y, const std::vector<double>& v_old,
                        double dt) {
        potentials(y, ws.pot);
        flux_divergence(ws.pot, h2, ws.div);
        ws.resid.resize(n);
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ws.resid[i] = y[i] - v_old[i] - dt * ws.div[i];
            norm = std::max(norm, std::abs(ws.resid[i]));
        }
        return norm;
    };
    auto attempt = [&](double dt, LineState& next) {
        ws.y = state.v;
        double rnorm = residual(ws.y, state.v, dt);
        bool converged = rnorm <= cfg.newton_tol;
        bool polished = false;
        int it = 0;
        while (it < cfg.newton_max_iter + 1) {
            if (converged && polished) break;
            if (converged) polished = true;
            ws.lower.assign(n, 0.0);
            ws.diag.assign(n, 1.0);
            ws.upper.assign(n, 0.0);
            const double c = dt / h2;
            for (std::size_t i = 0; i < n; ++i) {
                const double di = fl.slope(ws.y[i]);
                const int neighbours = (i == 0 || i == n - 1) ? 1 : 2;
                ws.diag[i] += c * neighbours * di;
                if (i > 0) ws.lower[i] = -c * fl.slope(ws.y[i - 1]);
                if (i + 1 < n) ws.upper[i] = -c * fl.slope(ws.y[i + 1]);
            }
            std::vector<double> delta = ws.resid;
            solve_tridiagonal(ws.lower, ws.diag, ws.upper, delta);
            double scale = 1.0;
            std::vector<double> trial(n);
            double trial_norm = rnorm;
            for (int halving = 0; halving < 30; ++halving) {
                for (std::size_t i = 0; i < n; ++i) trial[i] = ws.y[i] - scale * delta[i];
                trial_norm = residual(trial, state.v, dt);
                if (trial_norm < rnorm || trial_norm <= cfg.newton_tol) break;
                scale *= 0.5;
            }
            ws.y = trial;
            rnorm = trial_norm;
            ++it;
            if (rnorm <= cfg.newton_tol) converged = true;
        }
        if (!converged) return false;
        // flux-form finish: exact discrete mass conservation by telescoping
        potentials(ws.y, ws.pot);
        flux_divergence(ws.pot, h2, ws.div);
        next.t = state.t + dt;
        next.v.resize(n);
        for (std::size_t i = 0; i < n; ++i) next.v[i] = state.v[i] + dt * ws.div[i];
        return true;
    };

    double dt = cfg.dt_init;
    while (out_idx < cfg.output_times.size()) {
        const double t_target = cfg.output_times[out_idx];
        double dt_try = std::min(dt, cfg.dt_max);
        bool lands = false;
        if (state.t + dt_try >= t_target - 1e-13 * std::max(1.0, t_target)) {
            dt_try = t_target - state.t;
            lands = true;
        }
        LineState next;
        if (!attempt(dt_try, next)) {
            dt *= 0.5;
            if (dt < 1e-14) {
                throw StallError("time step underflow (dt < 1e-14) at t=" +
                                     std::to_string(state.t),
                                 Trajectory{});
            }
            continue;
        }
        if (lands) next.t = t_target;
        state = std::move(next);
        const double vmin = *std::min_element(state.v.begin(), state.v.end());
        if (vmin < -10.0 * cfg.newton_tol) {
            throw IntegrityError("negativity beyond tolerance at t=" + std::to_string(state.t));
        }
        traj.steps.push_back(make_record(grid, state));
        if (lands) {
            traj.states.push_back(state);
            ++out_idx;
        }
        dt = std::min(dt * 1.2, cfg.dt_max);
    }
    return traj;
}

SolutionFrame integrate_to_u(const LineGrid& grid, const LineState& state) {
    const double h = grid.spacing();
    SolutionFrame f;
    f.t = state.t;
    f.x.resize(state.v.size() + 1);
    f.u.resize(state.v.size() + 1);
    f.x[0] = grid.x_min;
    f.u[0] = 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i < state.v.size(); ++i) {
        acc += state.v[i] * h;
        f.x[i + 1] = grid.x_min + (static_cast<double>(i) + 1.0) * h;
        f.u[i + 1] = acc;
    }
    // numerical support bounds double as interfaces
    f.l = f.r = 0.5 * (grid.x_min + grid.x_max);
    bool found = false;
    for (std::size_t i = 0; i < state.v.size(); ++i) {
        if (state.v[i] > kSupportCutoff) {
            f.l = f.x[i];
            found = true;
            break;
        }
    }
    if (found) {
        for (std::size_t i = state.v.size(); i-- > 0;) {
            if (state.v[i] > kSupportCutoff) {
                f.r = f.x[i + 1];
                break;
            }
        }
    }
    const double total = f.u.back();
    if (total > 0.0) {
        double target = 0.5 * total;
        f.center_c = f.x.back();
        for (std::size_t i = 0; i + 1 < f.u.size(); ++i) {
            if (f.u[i + 1] >= target) {
                const double du = f.u[i + 1] - f.u[i];
                const double w = du > 0.0 ? (target - f.u[i]) / du : 0.0;
                f.center_c = f.x[i] + w * (f.x[i + 1] - f.x[i]);
                break;
            }
        }
    } else {
        f.center_c = 0.5 * (grid.x_min + grid.x_max);
    }
    return f;
}

double check_mass_conservation(const LineTrajectory& traj) {
    if (traj.steps.empty()) return 0.0;
    const double m0 = traj.steps.front().mass;
    if (m0 == 0.0) return 0.0;
    double worst = 0.0;
    for (const auto& r : traj.steps) {
        worst = std::max(worst, std::abs(r.mass - m0) / m0);
    }
    return worst;
}

Series LineTrajectory::sup_series() const {
    Series s;
    for (const auto& r : steps) s.push(r.t, r.sup);
    return s;
}

Series LineTrajectory::mass_series() const {
    Series s;
    for (const auto& r : steps) s.push(r.t, r.mass);
    return s;
}

Series LineTrajectory::support_radius_series() const {
    Series s;
    for (const auto& r : steps) s.push(r.t, 0.5 * (r.support_right - r.support_left));
    return s;
}

} // namespace steepfront
