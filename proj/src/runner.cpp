#include "steepfront/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

#include "steepfront/analysis.hpp"
#include "steepfront/cauchysolver.hpp"
#include "steepfront/conjsolver.hpp"
#include "steepfront/error.hpp"
#include "steepfront/selfsim.hpp"
#include "steepfront/svg.hpp"
#include "steepfront/transform.hpp"

namespace steepfront {

namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kReportPassTol = 0.10; // relative, for the report's pass/fail column

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw Error("cannot write " + p.string());
    return f;
}

// ---------------------------------------------------------------- presets

double symmetric_cos_x0(double u) { return -std::cos(kPi * u); }

double asymmetric_poly_x0(double u) {
    return 2.0 * std::pow(u, 4) - 0.5 * std::pow(u, 6) - 1.0;
}

// intensity profile matching symmetric-cos: u0(x) = acos(-x)/pi on [-1, 1]
double symmetric_cos_u0(double x) {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return std::acos(-x) / kPi;
}

// numeric inverse of the asymmetric polynomial (strictly increasing on [0,1])
double asymmetric_poly_u0(double x) {
    if (x <= asymmetric_poly_x0(0.0)) return 0.0;
    if (x >= asymmetric_poly_x0(1.0)) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (asymmetric_poly_x0(mid) < x ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// antiderivative of the unit-mass cosine bump (1 + cos(pi x))/2 on [-1, 1]
double unit_bump_mass(double x) {
    if (x <= -1.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 0.5 * (x + 1.0) + std::sin(kPi * x) / (2.0 * kPi);
}

// source-type profile: the unit-mass solution of v_t = (v^2/2)_xx at t = 1,
// v = tau^{-1/3} (C0 - xi^2/12)_+ with xi = x tau^{-1/3}, tau = 1/2
struct SourceBump {
    static constexpr double k = 1.0 / 12.0;
    double tau;
    double c0 = std::pow(0.75, 2.0 / 3.0) * std::pow(k, 1.0 / 3.0);
    double xi0 = 0.0;

    explicit SourceBump(double t_param) : tau(0.5 * t_param) { xi0 = std::sqrt(c0 / k); }

    double value(double x) const {
        const double xi = x * std::pow(tau, -1.0 / 3.0);
        const double shape = c0 - k * xi * xi;
        return shape > 0.0 ? std::pow(tau, -1.0 / 3.0) * shape : 0.0;
    }
    // cumulative mass, exact for cell averaging
    double mass(double x) const {
        double xi = x * std::pow(tau, -1.0 / 3.0);
        xi = std::clamp(xi, -xi0, xi0);
        auto prim = [&](double s) { return c0 * s - k * s * s * s / 3.0; };
        return prim(xi) - prim(-xi0);
    }
};

std::function<double(double)> profile_x0(const RunConfig& rc) {
    if (!rc.data.profile.empty()) {
        std::vector<double> xs, us;
        for (const auto& [x, u] : rc.data.profile) {
            xs.push_back(x);
            us.push_back(u);
        }
        auto profile = std::make_shared<MonotoneProfile>(std::move(xs), std::move(us));
        return [profile](double u) { return profile->inverse(u); };
    }
    if (rc.data.preset == "asymmetric-poly") return asymmetric_poly_x0;
    return symmetric_cos_x0;
}

std::function<double(double)> profile_u0(const RunConfig& rc) {
    if (!rc.data.profile.empty()) {
        std::vector<double> xs, us;
        for (const auto& [x, u] : rc.data.profile) {
            xs.push_back(x);
            us.push_back(u);
        }
        auto profile = std::make_shared<MonotoneProfile>(std::move(xs), std::move(us));
        return [profile](double x) { return profile->value(x); };
    }
    if (rc.data.preset == "asymmetric-poly") return asymmetric_poly_u0;
    return symmetric_cos_u0;
}

// exact cell averages from a cumulative mass function
std::vector<double> averages_from_mass(const LineGrid& grid,
                                       const std::function<double(double)>& mass_fn) {
    std::vector<double> v(grid.n_cells);
    const double h = grid.spacing();
    double left = mass_fn(grid.x_min);
    for (int i = 0; i < grid.n_cells; ++i) {
        const double right = mass_fn(grid.x_min + (i + 1) * h);
        v[i] = (right - left) / h;
        left = right;
    }
    return v;
}

std::vector<double> line_initial_data(const RunConfig& rc, const LineGrid& grid) {
    if (!rc.data.values.empty()) {
        std::vector<double> xs, vs;
        for (const auto& [x, val] : rc.data.values) {
            xs.push_back(x);
            vs.push_back(val);
        }
        std::vector<double> v(grid.n_cells);
        for (int i = 0; i < grid.n_cells; ++i) {
            const double xc = grid.center(i);
            if (xc <= xs.front() || xc >= xs.back()) {
                v[i] = 0.0;
                continue;
            }
            const auto it = std::upper_bound(xs.begin(), xs.end(), xc);
            const auto j = static_cast<std::size_t>(it - xs.begin()) - 1;
            const double w = (xc - xs[j]) / (xs[j + 1] - xs[j]);
            v[i] = vs[j] * (1.0 - w) + vs[j + 1] * w;
        }
        return v;
    }
    if (rc.data.preset == "source-bump") {
        const SourceBump bump(1.0);
        return averages_from_mass(grid, [&](double x) { return bump.mass(x); });
    }
    if (rc.data.preset == "symmetric-cos" || rc.data.preset == "asymmetric-poly") {
        // coexistence mode: the gradient of the named intensity profile
        auto u0 = profile_u0(rc);
        return averages_from_mass(grid, u0);
    }
    return averages_from_mass(grid, unit_bump_mass);
}

// ------------------------------------------------------------- law wiring

double conjugate_exponent(const RunConfig& rc) {
    if (rc.law.family == "curvature") return 1.0 + 2.0 * rc.law.alpha.value_or(0.0);
    if (rc.law.q) return *rc.law.q;
    if (rc.law.m) return -*rc.law.m;
    return 1.0;
}

FluxLaw conjugate_law(const RunConfig& rc) {
    if (rc.law.family == "curvature") {
        return conjugate(FluxLaw::curvature(*rc.law.alpha));
    }
    return FluxLaw::power(conjugate_exponent(rc));
}

FluxLaw source_law(const RunConfig& rc) {
    if (rc.law.family == "curvature") return FluxLaw::curvature(*rc.law.alpha);
    const double m = rc.law.m ? *rc.law.m : -*rc.law.q;
    return FluxLaw::power(m);
}

SolveConfig make_solve_config(const RunConfig& rc, FluxLaw law) {
    SolveConfig cfg{std::move(law)};
    cfg.dt_init = rc.solver.dt_init;
    cfg.dt_max = rc.solver.dt_max;
    cfg.epsilon = rc.solver.epsilon;
    cfg.newton_tol = rc.solver.newton_tol;
    cfg.newton_max_iter = rc.solver.newton_max_iter;
    cfg.extinction_threshold = rc.solver.extinction_threshold;
    cfg.output_times = rc.output.times;
    if (rc.law.family == "curvature") {
        cfg.extinction_fit_exponent = conjugate_exponent(rc);
    }
    return cfg;
}

// ------------------------------------------------------------ file output

void write_manifest(const fs::path& dir, const RunConfig& rc) {
    auto f = open_out(dir / "manifest.txt");
    f << "steepfront " << kVersion << "\n";
    for (const auto& line : rc.resolved()) f << line << "\n";
}

void write_interfaces_csv(const fs::path& dir, const Trajectory& traj) {
    auto f = open_out(dir / "interfaces.csv");
    f << "t,l,r,mass\n";
    for (const auto& s : traj.steps) {
        f << fmt17(s.t) << ',' << fmt17(s.left) << ',' << fmt17(s.right) << ','
          << fmt17(s.width) << '\n';
    }
}

void write_interfaces_csv(const fs::path& dir, const LineTrajectory& traj) {
    auto f = open_out(dir / "interfaces.csv");
    f << "t,l,r,mass\n";
    for (const auto& s : traj.steps) {
        f << fmt17(s.t) << ',' << fmt17(s.support_left) << ',' << fmt17(s.support_right)
          << ',' << fmt17(s.mass) << '\n';
    }
}

void write_profiles_csv(const fs::path& dir, const std::vector<SolutionFrame>& frames) {
    auto f = open_out(dir / "profiles.csv");
    f << "t,x,u\n";
    for (const auto& frame : frames) {
        for (std::size_t i = 0; i < frame.x.size(); ++i) {
            f << fmt17(frame.t) << ',' << fmt17(frame.x[i]) << ',' << fmt17(frame.u[i])
              << '\n';
        }
    }
}

struct RateRow {
    std::string name;
    RateFit fit;
    std::optional<double> t_est;
};

void write_rates_csv(const fs::path& dir, const std::vector<RateRow>& rows) {
    auto f = open_out(dir / "rates.csv");
    f << "name,kind,exponent,amplitude,window_start,window_end,rms_residual,target,t_est\n";
    for (const auto& r : rows) {
        f << r.name << ',' << (r.fit.kind == FitKind::Power ? "power" : "exponential") << ','
          << fmt17(r.fit.exponent) << ',' << fmt17(r.fit.amplitude) << ','
          << fmt17(r.fit.window.t_start) << ',' << fmt17(r.fit.window.t_end) << ','
          << fmt17(r.fit.rms_residual) << ','
          << (r.fit.target ? fmt17(*r.fit.target) : std::string()) << ','
          << (r.t_est ? fmt17(*r.t_est) : std::string()) << '\n';
    }
}

void write_frame_plots(const fs::path& dir, const std::vector<SolutionFrame>& frames) {
    int idx = 0;
    for (const auto& frame : frames) {
        SvgPlot plot;
        plot.title = "profile at t = " + fmt17(frame.t);
        plot.x_label = "x";
        plot.y_label = "u";
        SvgCurve c;
        c.x = frame.x;
        c.y = frame.u;
        plot.curves.push_back(std::move(c));
        plot.vertical_markers = {frame.l, frame.r};
        char name[32];
        std::snprintf(name, sizeof name, "profile_%03d.svg", idx++);
        plot.write(dir / name);
    }
}

Series reciprocal(const Series& s) {
    Series out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.y[i] > 0.0) out.push(s.t[i], 1.0 / s.y[i]);
    }
    return out;
}

// ------------------------------------------------------------- mode runs

void run_focusing(const RunConfig& rc, const fs::path& dir, std::ostream& log, bool quiet) {
    const ConjGrid grid(rc.grid.n_cells);
    const SolveConfig cfg = make_solve_config(rc, conjugate_law(rc));
    const double q = conjugate_exponent(rc);

    Trajectory traj;
    try {
        traj = solve(grid, profile_x0(rc), cfg);
    } catch (const StallError& e) {
        // keep whatever was computed, then rethrow for the exit code
        write_interfaces_csv(dir, e.partial());
        throw;
    }

    write_interfaces_csv(dir, traj);
    std::vector<SolutionFrame> frames;
    frames.reserve(traj.states.size());
    for (const auto& s : traj.states) frames.push_back(reconstruct(s));
    write_profiles_csv(dir, frames);
    if (rc.output.plots) write_frame_plots(dir, frames);

    std::vector<RateRow> rows;
    const Series half_width = traj.half_width_series();
    const Series gradient = reciprocal(traj.min_slope_series());
    try {
        if (q == 1.0) {
            const FitWindow w = default_fit_window(half_width);
            RateRow hw{"half-width", fit_exponential(half_width, w), std::nullopt};
            hw.fit.target = -kPi * kPi;
            rows.push_back(hw);
            RateRow gr{"max-gradient", fit_exponential(gradient, w), std::nullopt};
            gr.fit.target = kPi * kPi;
            rows.push_back(gr);
        } else if (q > 1.0) {
            const FitWindow w = default_fit_window(half_width);
            RateRow hw{"half-width", fit_power(half_width, w), std::nullopt};
            hw.fit.target = -1.0 / (q - 1.0);
            rows.push_back(hw);
            RateRow gr{"max-gradient", fit_power(gradient, w), std::nullopt};
            gr.fit.target = 1.0 / (q - 1.0);
            rows.push_back(gr);
        } else {
            const ExtinctionEstimate est = estimate_extinction(traj, q);
            rows.push_back(RateRow{"half-width-to-extinction", est.half_width_fit,
                                   est.t_est});
            RateRow gr{"max-gradient-to-extinction",
                       fit_power(gradient, est.half_width_fit.window, est.t_est), est.t_est};
            gr.fit.target = -1.0 / (1.0 - q);
            rows.push_back(gr);
        }
    } catch (const Error& e) {
        if (!quiet) log << "note: rate fit skipped: " << e.what() << "\n";
    }
    write_rates_csv(dir, rows);

    if (!quiet) {
        log << "focusing run: q = " << q << ", " << traj.steps.size() - 1 << " steps";
        if (traj.extinction) log << ", extinction at T ~ " << traj.extinction->t_est;
        log << "\n";
        for (const auto& r : rows) {
            log << "  " << r.name << ": exponent " << r.fit.exponent;
            if (r.fit.target) log << " (target " << *r.fit.target << ")";
            log << "\n";
        }
    }
}

void run_dispersive(const RunConfig& rc, const fs::path& dir, std::ostream& log, bool quiet) {
    const LineGrid grid(*rc.grid.x_min, *rc.grid.x_max, rc.grid.n_cells);
    const FluxLaw law = source_law(rc);
    const SolveConfig cfg = make_solve_config(rc, law);
    LineTrajectory traj = solve_line(grid, line_initial_data(rc, grid), law, cfg);

    for (const auto& w : traj.warnings) {
        if (!quiet) log << "warning: " << w << "\n";
    }
    write_interfaces_csv(dir, traj);
    std::vector<SolutionFrame> frames;
    frames.reserve(traj.states.size());
    for (const auto& s : traj.states) frames.push_back(integrate_to_u(grid, s));
    write_profiles_csv(dir, frames);
    if (rc.output.plots) write_frame_plots(dir, frames);

    std::vector<RateRow> rows;
    try {
        const Series sup = traj.sup_series();
        const FitWindow w = default_fit_window(sup);
        RateRow row{"sup-norm", fit_power(sup, w), std::nullopt};
        if (const auto* p = law.as_power()) {
            row.fit.target = -1.0 / (p->m + 1.0);
        }
        rows.push_back(row);
    } catch (const Error& e) {
        if (!quiet) log << "note: rate fit skipped: " << e.what() << "\n";
    }
    write_rates_csv(dir, rows);

    if (!quiet) {
        log << "dispersive run: " << traj.steps.size() - 1
            << " steps, mass drift " << check_mass_conservation(traj) << "\n";
        for (const auto& r : rows) {
            log << "  " << r.name << ": exponent " << r.fit.exponent;
            if (r.fit.target) log << " (target " << *r.fit.target << ")";
            log << "\n";
        }
    }
}

void run_profile_mode(const RunConfig& rc, const fs::path& dir, std::ostream& log,
                      bool quiet) {
    if (rc.law.q) {
        const double q = *rc.law.q;
        std::vector<double> u, f;
        double slope0 = 0.0;
        if (q == 1.0) {
            const int n = 2001;
            u.resize(n);
            f.resize(n);
            for (int i = 0; i < n; ++i) {
                u[i] = double(i) / (n - 1);
                f[i] = std::sin(kPi * u[i]);
            }
            slope0 = kPi;
        } else {
            const EigenProfile profile = eigenprofile(q);
            u = profile.u;
            f = profile.f;
            slope0 = profile.slope0;
        }
        auto out = open_out(dir / "eigenprofile.csv");
        out << "u,f,symmetry_gap\n";
        const std::size_t n = u.size();
        for (std::size_t i = 0; i < n; ++i) {
            out << fmt17(u[i]) << ',' << fmt17(f[i]) << ','
                << fmt17(std::abs(f[i] - f[n - 1 - i])) << '\n';
        }
        if (rc.output.plots) {
            SvgPlot plot;
            plot.title = "eigenprofile, q = " + fmt17(q);
            plot.x_label = "u";
            plot.y_label = "f";
            plot.curves.push_back(SvgCurve{u, f, "#1f6fb2", ""});
            plot.write(dir / "eigenprofile.svg");
        }
        if (!quiet) {
            log << "eigenprofile q = " << q << ": initial slope " << slope0
                << ", peak " << *std::max_element(f.begin(), f.end()) << "\n";
        }
    }
    if (rc.law.alpha) {
        const SimilarityProfile sp = similarity_profile(*rc.law.alpha);
        auto out = open_out(dir / "similarity.csv");
        out << "xi,F\n";
        for (std::size_t i = 0; i < sp.xi.size(); ++i) {
            out << fmt17(sp.xi[i]) << ',' << fmt17(sp.f[i]) << '\n';
        }
        if (rc.output.plots) {
            SvgPlot plot;
            plot.title = "similarity profile, alpha = " + fmt17(sp.alpha);
            plot.x_label = "xi";
            plot.y_label = "F";
            plot.curves.push_back(SvgCurve{sp.xi, sp.f, "#1f6fb2", ""});
            plot.write(dir / "similarity.svg");
        }
        if (!quiet) {
            log << "similarity profile alpha = " << sp.alpha << ": A = " << sp.amplitude_a
                << ", K = " << sp.half_width_k << "\n";
        }
    }
}

void run_rates_mode(const RunConfig& rc, const fs::path& dir, std::ostream& log,
                    bool quiet) {
    const RatePrediction pred = rate_predictions(*rc.law.q);
    std::vector<RateRow> rows;
    const FitKind kind =
        pred.regime == Regime::Exponential ? FitKind::Exponential : FitKind::Power;
    auto add = [&](const std::string& name, double value) {
        RateRow r{name, RateFit{}, std::nullopt};
        r.fit.kind = kind;
        r.fit.exponent = value;
        r.fit.target = value;
        rows.push_back(r);
    };
    add("predicted-interface", pred.interface_exponent);
    add("predicted-gradient", pred.gradient_exponent);
    add("predicted-endpoint", pred.endpoint_exponent);
    add("predicted-interface-blowup-gamma", pred.gamma_interface_blowup);
    write_rates_csv(dir, rows);
    if (!quiet) {
        const char* regime = pred.regime == Regime::Exponential     ? "exponential"
                             : pred.regime == Regime::PowerDecay    ? "power decay"
                                                                    : "finite-time extinction";
        log << "q = " << pred.q << ": " << regime << "; interface exponent "
            << pred.interface_exponent << ", gradient " << pred.gradient_exponent
            << ", endpoint " << pred.endpoint_exponent << "\n";
    }
}

} // namespace

fs::path resolve_out_dir(const RunConfig& cfg, const RunOptions& opt) {
    if (opt.out_override) return fs::path(*opt.out_override);
    if (const char* env = std::getenv("STEEPFRONT_OUT")) {
        if (*env) return fs::path(env);
    }
    return fs::path(cfg.output.dir);
}

int run_config(const fs::path& config_path, const RunOptions& opt, std::ostream& log) {
    RunConfig rc;
    try {
        rc = load_config(config_path);
    } catch (const ConfigError& e) {
        log << "validation failed:\n" << e.what();
        return kExitValidation;
    }
    const fs::path dir = resolve_out_dir(rc, opt);
    try {
        fs::create_directories(dir);
        write_manifest(dir, rc);
        switch (rc.mode) {
        case RunMode::TypeII: run_focusing(rc, dir, log, opt.quiet); break;
        case RunMode::TypeI: run_dispersive(rc, dir, log, opt.quiet); break;
        case RunMode::Coexist: {
            fs::create_directories(dir / "typeI");
            fs::create_directories(dir / "typeII");
            RunConfig disp = rc;
            disp.mode = RunMode::TypeI;
            run_dispersive(disp, dir / "typeI", log, opt.quiet);
            RunConfig foc = rc;
            foc.mode = RunMode::TypeII;
            run_focusing(foc, dir / "typeII", log, opt.quiet);
            break;
        }
        case RunMode::Profile: run_profile_mode(rc, dir, log, opt.quiet); break;
        case RunMode::Rates: run_rates_mode(rc, dir, log, opt.quiet); break;
        }
    } catch (const StallError& e) {
        log << "solver stall: " << e.what() << "\n";
        return kExitStall;
    } catch (const ConfigError& e) {
        log << "validation failed:\n" << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        log << "run failed: " << e.what() << "\n";
        return kExitFailure;
    }
    if (!opt.quiet) log << "outputs written to " << dir.string() << "\n";
    return kExitOk;
}

int validate_config(const fs::path& config_path, std::ostream& log) {
    const std::string report = validation_report(config_path);
    log << report << (report.back() == '\n' ? "" : "\n");
    return report == "ok" ? kExitOk : kExitValidation;
}

namespace {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::optional<CsvTable> read_csv(const fs::path& p) {
    std::ifstream in(p);
    if (!in) return std::nullopt;
    CsvTable t;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        if (first) {
            t.header = cells;
            first = false;
        } else {
            t.rows.push_back(cells);
        }
    }
    return t;
}

int column(const CsvTable& t, const std::string& name) {
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (t.header[i] == name) return static_cast<int>(i);
    }
    return -1;
}

} // namespace

int report_run(const fs::path& run_dir, std::ostream& log) {
    log << "run report: " << run_dir.string() << "\n";
    bool any = false;

    const auto rates = read_csv(run_dir / "rates.csv");
    if (rates && !rates->rows.empty()) {
        any = true;
        const int c_name = column(*rates, "name");
        const int c_exp = column(*rates, "exponent");
        const int c_target = column(*rates, "target");
        const int c_test = column(*rates, "t_est");
        log << "rates:\n";
        for (const auto& row : rates->rows) {
            const std::string name = c_name >= 0 ? row[c_name] : "?";
            log << "  " << name << ": exponent " << row[c_exp];
            if (c_target >= 0 && !row[c_target].empty()) {
                const double e = std::stod(row[c_exp]);
                const double tgt = std::stod(row[c_target]);
                const double rel = std::abs(e - tgt) / std::max(1e-300, std::abs(tgt));
                log << ", target " << row[c_target] << " -> "
                    << (rel <= kReportPassTol ? "PASS" : "FAIL") << " (" << rel * 100.0
                    << "% off)";
            }
            if (c_test >= 0 && static_cast<std::size_t>(c_test) < row.size() &&
                !row[c_test].empty()) {
                log << ", T_est = " << row[c_test];
            }
            log << "\n";
        }
    } else {
        log << "warning: no rates.csv found\n";
    }

    const auto interfaces = read_csv(run_dir / "interfaces.csv");
    if (interfaces && !interfaces->rows.empty()) {
        any = true;
        SvgCurve left, right;
        left.color = "#1f6fb2";
        left.label = "l(t)";
        right.color = "#b23a1f";
        right.label = "r(t)";
        SvgCurve massc;
        massc.color = "#2a7f2a";
        massc.label = "mass";
        double mass0 = 0.0, mass_end = 0.0;
        for (std::size_t i = 0; i < interfaces->rows.size(); ++i) {
            const auto& row = interfaces->rows[i];
            const double t = std::stod(row[0]);
            left.x.push_back(t);
            left.y.push_back(std::stod(row[1]));
            right.x.push_back(t);
            right.y.push_back(std::stod(row[2]));
            massc.x.push_back(t);
            massc.y.push_back(std::stod(row[3]));
            if (i == 0) mass0 = massc.y.back();
            mass_end = massc.y.back();
        }
        log << "interfaces: " << interfaces->rows.size() << " records, width "
            << fmt17(mass0) << " -> " << fmt17(mass_end) << "\n";
        SvgPlot funnel;
        funnel.title = "interface funnel and mass decay";
        funnel.x_label = "t";
        funnel.y_label = "x / mass";
        funnel.curves = {left, right, massc};
        funnel.write(run_dir / "report.svg");
        log << "wrote " << (run_dir / "report.svg").string() << "\n";
    } else {
        log << "warning: no interfaces.csv found\n";
    }
    if (!any) log << "warning: nothing to report\n";
    return kExitOk;
}

int run_sweep(const std::vector<fs::path>& configs, const RunOptions& opt,
              std::ostream& log) {
    std::vector<std::future<std::pair<int, std::string>>> jobs;
    jobs.reserve(configs.size());
    for (const auto& path : configs) {
        jobs.push_back(std::async(std::launch::async, [path, &opt]() {
            std::ostringstream local;
            RunOptions sub = opt;
            if (opt.out_override) {
                sub.out_override = (fs::path(*opt.out_override) / path.stem()).string();
            }
            const int code = run_config(path, sub, local);
            return std::make_pair(code, local.str());
        }));
    }
    int worst = kExitOk;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        auto [code, text] = jobs[i].get();
        log << "--- " << configs[i].string() << "\n" << text;
        worst = std::max(worst, code);
    }
    return worst;
}

} // namespace steepfront
