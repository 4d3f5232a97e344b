#include "steepfront/conjsolver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "steepfront/error.hpp"

namespace steepfront {

ConjGrid::ConjGrid(int n) : n_cells(n) {
    if (n < 2) throw DomainError("conjugate grid needs at least 2 cells");
}

std::vector<double> ConjugateState::face_slopes() const {
    std::vector<double> w(n_faces());
    for (int i = 0; i < n_faces(); ++i) w[i] = face_slope(i);
    return w;
}

double ConjugateState::max_face_slope() const {
    double m = face_slope(0);
    for (int i = 1; i < n_faces(); ++i) m = std::max(m, face_slope(i));
    return m;
}

double ConjugateState::min_face_slope() const {
    double m = face_slope(0);
    for (int i = 1; i < n_faces(); ++i) m = std::min(m, face_slope(i));
    return m;
}

std::pair<double, double> interfaces(const ConjugateState& state) {
    return {state.x.front(), state.x.back()};
}

double mass(const ConjugateState& state) { return state.x.back() - state.x.front(); }

ConjugateState init_from_x0(const ConjGrid& grid, const std::function<double(double)>& x0) {
    ConjugateState s;
    s.t = 0.0;
    s.h = grid.spacing();
    s.x.resize(grid.n_nodes());
    for (int i = 0; i < grid.n_nodes(); ++i) s.x[i] = x0(grid.node(i));
    for (int i = 0; i < grid.n_cells; ++i) {
        if (s.x[i + 1] < s.x[i]) {
            throw DomainError("initial data decreasing between u=" + std::to_string(grid.node(i)) +
                              " and u=" + std::to_string(grid.node(i + 1)));
        }
    }
    return s;
}

namespace {

// psi_eps(w) = psi(w + eps) - psi(eps) for w >= 0, extended linearly with
// slope psi'(eps) below zero. Keeps psi_eps(0) = 0 and strict monotonicity,
// and absorbs any additive constant in psi.
struct RegularizedFlux {
    const FluxLaw& law;
    double eps;
    double value_at_eps;
    double slope_at_eps;

    RegularizedFlux(const FluxLaw& l, double e)
        : law(l), eps(e), value_at_eps(l.flux(e)), slope_at_eps(l.diffusivity(e)) {}

    double value(double w) const {
        if (w <= 0.0) return slope_at_eps * w;
        return law.flux(w + eps) - value_at_eps;
    }
    double slope(double w) const {
        if (w <= 0.0) return slope_at_eps;
        return law.diffusivity(w + eps);
    }
};

// Thomas algorithm; diag/rhs are overwritten, solution lands in rhs.
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

struct StepWorkspace {
    std::vector<double> y, fluxes, slopes, resid, lower, diag, upper;
};

// Control volumes: h for interior nodes, h/2 at the two boundary nodes, so
// the zero ghost flux is consistent with a wall at u = 0 and u = 1.
double cell_width(int i, int n_nodes, double h) {
    return (i == 0 || i == n_nodes - 1) ? 0.5 * h : h;
}

void face_fluxes(const std::vector<double>& y, double h, const RegularizedFlux& reg,
                 std::vector<double>& out) {
    const std::size_t nf = y.size() - 1;
    out.resize(nf);
    for (std::size_t i = 0; i < nf; ++i) out[i] = reg.value((y[i + 1] - y[i]) / h);
}

double residual(const std::vector<double>& y, const std::vector<double>& x_old, double dt,
                double h, const std::vector<double>& fluxes, std::vector<double>& out) {
    const std::size_t n = y.size();
    out.resize(n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = cell_width(static_cast<int>(i), static_cast<int>(n), h);
        double div = 0.0;
        if (i == 0) {
            div = fluxes[0] / hi;
        } else if (i == n - 1) {
            div = -fluxes[n - 2] / hi;
        } else {
            div = (fluxes[i] - fluxes[i - 1]) / hi;
        }
        out[i] = y[i] - x_old[i] - dt * div;
        norm = std::max(norm, std::abs(out[i]));
    }
    return norm;
}

// Returns false when Newton fails to reach the tolerance.
bool attempt_step(const ConjugateState& state, double dt, const RegularizedFlux& reg,
                  const SolveConfig& cfg, StepWorkspace& ws, ConjugateState& out) {
    const std::size_t n = state.x.size();
    const double h = state.h;
    ws.y = state.x;
    face_fluxes(ws.y, h, reg, ws.fluxes);
    double rnorm = residual(ws.y, state.x, dt, h, ws.fluxes, ws.resid);

    int it = 0;
    bool converged = rnorm <= cfg.newton_tol;
    bool polished = false;
    while (it < cfg.newton_max_iter + 1) {
        if (converged && polished) break;
        if (converged) polished = true; // one extra iteration past the tolerance
        ws.slopes.resize(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            ws.slopes[i] = reg.slope((ws.y[i + 1] - ws.y[i]) / h);
        }
        ws.lower.assign(n, 0.0);
        ws.diag.assign(n, 1.0);
        ws.upper.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double hi = cell_width(static_cast<int>(i), static_cast<int>(n), h);
            const double c = dt / (hi * h);
            if (i > 0) {
                ws.diag[i] += c * ws.slopes[i - 1];
                ws.lower[i] = -c * ws.slopes[i - 1];
            }
            if (i + 1 < n) {
                ws.diag[i] += c * ws.slopes[i];
                ws.upper[i] = -c * ws.slopes[i];
            }
        }
        std::vector<double> delta = ws.resid;
        solve_tridiagonal(ws.lower, ws.diag, ws.upper, delta);

        // damping: halve the update until the residual norm decreases
        double scale = 1.0;
        std::vector<double> trial(n);
        double trial_norm = rnorm;
        for (int halving = 0; halving < 30; ++halving) {
            for (std::size_t i = 0; i < n; ++i) trial[i] = ws.y[i] - scale * delta[i];
            face_fluxes(trial, h, reg, ws.fluxes);
            trial_norm = residual(trial, state.x, dt, h, ws.fluxes, ws.resid);
            if (trial_norm < rnorm || trial_norm <= cfg.newton_tol) break;
            scale *= 0.5;
        }
        ws.y = trial;
        rnorm = trial_norm;
        ++it;
        if (rnorm <= cfg.newton_tol) converged = true;
    }
    if (!converged) return false;

    // flux-form finish: rebuild the state from the converged face fluxes so
    // that the discrete bookkeeping (width monotone, boundaries one-sided)
    // telescopes exactly
    face_fluxes(ws.y, h, reg, ws.fluxes);
    out.t = state.t + dt;
    out.h = h;
    out.x.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = cell_width(static_cast<int>(i), static_cast<int>(n), h);
        double div = 0.0;
        if (i == 0) {
            div = ws.fluxes[0] / hi;
        } else if (i == n - 1) {
            div = -ws.fluxes[n - 2] / hi;
        } else {
            div = (ws.fluxes[i] - ws.fluxes[i - 1]) / hi;
        }
        out.x[i] = state.x[i] + dt * div;
    }
    return true;
}

StepRecord make_record(const ConjugateState& s) {
    StepRecord r;
    r.t = s.t;
    r.left = s.x.front();
    r.right = s.x.back();
    r.width = r.right - r.left;
    r.max_slope = s.max_face_slope();
    r.min_slope = s.min_face_slope();
    return r;
}

// Refine the extinction time by fitting (max slope)^{1-q} as a linear
// function of t over the final decade of the max-slope series; exact for
// the separated-variables decay.
double refine_extinction_time(const std::vector<StepRecord>& steps, double threshold,
                              std::optional<double> q) {
    double t_last = steps.back().t;
    std::vector<std::pair<double, double>> pts;
    double w_floor = 0.0;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (it->max_slope > threshold) {
            w_floor = it->max_slope;
            t_last = it->t;
            break;
        }
    }
    if (!q || *q <= 0.0 || *q >= 1.0 || w_floor == 0.0) return t_last;
    for (const auto& r : steps) {
        if (r.max_slope > threshold && r.max_slope <= 10.0 * w_floor) {
            pts.emplace_back(r.t, std::pow(r.max_slope, 1.0 - *q));
        }
    }
    if (pts.size() < 2) return t_last;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [tx, ty] : pts) {
        sx += tx;
        sy += ty;
        sxx += tx * tx;
        sxy += tx * ty;
    }
    const double n = static_cast<double>(pts.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icept = (sy - slope * sx) / n;
    if (!(slope < 0.0)) return t_last;
    const double root = -icept / slope;
    return std::isfinite(root) && root > 0.0 ? root : t_last;
}

void validate_config(const SolveConfig& cfg) {
    if (!(cfg.dt_init > 0.0) || !(cfg.dt_max > 0.0) || cfg.dt_init > cfg.dt_max) {
        throw ConfigError("need 0 < dt_init <= dt_max");
    }
    if (!(cfg.newton_tol > 0.0)) throw ConfigError("newton_tol must be positive");
    if (cfg.epsilon < 0.0) throw ConfigError("epsilon must be nonnegative");
    if (!(cfg.extinction_threshold > 0.0)) {
        throw ConfigError("extinction_threshold must be positive");
    }
    if (cfg.output_times.empty()) throw ConfigError("output_times must not be empty");
    for (std::size_t i = 0; i < cfg.output_times.size(); ++i) {
        if (cfg.output_times[i] < 0.0 ||
            (i > 0 && cfg.output_times[i] <= cfg.output_times[i - 1])) {
            throw ConfigError("output_times must be nonnegative and strictly increasing");
        }
    }
    if (!conjugate_admissible(cfg.law)) {
        throw ConfigError("conjugate law " + cfg.law.description() +
                          " is inadmissible: its value must stay finite as the slope "
                          "vanishes (the source law needs a bounded flux at infinity)");
    }
}

} // namespace

ConjugateState step(const ConjugateState& state, double dt, const SolveConfig& cfg) {
    if (!(dt > 0.0) || dt > cfg.dt_max) throw DomainError("need 0 < dt <= dt_max");
    const RegularizedFlux reg(cfg.law, cfg.epsilon > 0.0 ? cfg.epsilon : 1e-300);
    StepWorkspace ws;
    ConjugateState out;
    if (!attempt_step(state, dt, reg, cfg, ws, out)) {
        throw StepFailure("Newton did not converge in " + std::to_string(cfg.newton_max_iter) +
                          " iterations at t=" + std::to_string(state.t));
    }
    if (out.min_face_slope() < -10.0 * cfg.newton_tol) {
        throw IntegrityError("monotonicity lost beyond tolerance at t=" + std::to_string(out.t));
    }
    return out;
}

Trajectory solve(const ConjGrid& grid, const std::function<double(double)>& x0,
                 const SolveConfig& cfg) {
    return solve(init_from_x0(grid, x0), cfg);
}

Trajectory solve(ConjugateState state, const SolveConfig& cfg) {
    validate_config(cfg);
    if (state.t != 0.0) throw DomainError("solve expects an initial state stamped t = 0");
    // free-boundary data must be strictly increasing: interior flat spots
    // make the inverse-function construction meaningless
    for (int i = 0; i < state.n_faces(); ++i) {
        if (state.face_slope(i) <= 0.0) {
            throw DomainError("initial data has a flat segment (zero face slope at face " +
                              std::to_string(i) + "); the focusing problem needs u0' > 0");
        }
    }
    std::optional<double> fit_q = cfg.extinction_fit_exponent;
    if (!fit_q) {
        if (const auto* p = cfg.law.as_power()) fit_q = p->m;
    }

    const RegularizedFlux reg(cfg.law, cfg.epsilon > 0.0 ? cfg.epsilon : 1e-300);
    StepWorkspace ws;
    Trajectory traj;
    traj.steps.push_back(make_record(state));

    std::size_t out_idx = 0;
    if (cfg.output_times[0] == 0.0) {
        traj.states.push_back(state);
        ++out_idx;
    }

    double dt = cfg.dt_init;
    while (out_idx < cfg.output_times.size()) {
        const double t_target = cfg.output_times[out_idx];
        double dt_try = std::min(dt, cfg.dt_max);
        bool lands = false;
        if (state.t + dt_try >= t_target - 1e-13 * std::max(1.0, t_target)) {
            dt_try = t_target - state.t;
            lands = true;
        }
        ConjugateState next;
        if (!attempt_step(state, dt_try, reg, cfg, ws, next)) {
            dt *= 0.5;
            if (dt < 1e-14) {
                throw StallError("time step underflow (dt < 1e-14) at t=" +
                                     std::to_string(state.t),
                                 std::move(traj));
            }
            continue;
        }
        if (lands) next.t = t_target;
        state = std::move(next);
        if (state.min_face_slope() < -10.0 * cfg.newton_tol) {
            throw IntegrityError("monotonicity lost beyond tolerance at t=" +
                                 std::to_string(state.t));
        }
        traj.steps.push_back(make_record(state));
        if (lands) {
            traj.states.push_back(state);
            ++out_idx;
        }
        dt = std::min(dt * 1.2, cfg.dt_max);
        if (state.max_face_slope() <= cfg.extinction_threshold) {
            traj.extinction =
                ExtinctionRecord{refine_extinction_time(traj.steps, cfg.extinction_threshold,
                                                        fit_q)};
            break;
        }
    }
    return traj;
}

namespace {

Series pick(const std::vector<StepRecord>& steps, double StepRecord::* field) {
    Series s;
    s.t.reserve(steps.size());
    s.y.reserve(steps.size());
    for (const auto& r : steps) s.push(r.t, r.*field);
    return s;
}

} // namespace

Series Trajectory::left_series() const { return pick(steps, &StepRecord::left); }
Series Trajectory::right_series() const { return pick(steps, &StepRecord::right); }
Series Trajectory::mass_series() const { return pick(steps, &StepRecord::width); }
Series Trajectory::max_slope_series() const { return pick(steps, &StepRecord::max_slope); }
Series Trajectory::min_slope_series() const { return pick(steps, &StepRecord::min_slope); }

Series Trajectory::half_width_series() const {
    Series s;
    s.t.reserve(steps.size());
    s.y.reserve(steps.size());
    for (const auto& r : steps) s.push(r.t, 0.5 * r.width);
    return s;
}

} // namespace steepfront
