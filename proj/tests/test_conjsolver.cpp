#include <doctest.h>

#include <cmath>

#include "steepfront/analysis.hpp"
#include "steepfront/conjsolver.hpp"
#include "steepfront/error.hpp"
#include "steepfront/selfsim.hpp"

using namespace steepfront;

namespace {

constexpr double kPi = 3.14159265358979323846;

SolveConfig heat_config(std::vector<double> times) {
    SolveConfig cfg{FluxLaw::power(1.0)};
    cfg.output_times = std::move(times);
    return cfg;
}

double cos_x0(double u) { return -std::cos(kPi * u); }

} // namespace

TEST_CASE("init_from_x0 samples the grid") {
    const ConjGrid grid(4);
    const ConjugateState s = init_from_x0(grid, cos_x0);
    const double r2 = std::sqrt(2.0) / 2.0;
    CHECK(s.x[0] == doctest::Approx(-1.0));
    CHECK(s.x[1] == doctest::Approx(-r2));
    CHECK(s.x[2] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(s.x[3] == doctest::Approx(r2));
    CHECK(s.x[4] == doctest::Approx(1.0));

    const ConjugateState lin = init_from_x0(grid, [](double u) { return 2.0 * u - 1.0; });
    for (int i = 0; i < lin.n_faces(); ++i) CHECK(lin.face_slope(i) == doctest::Approx(2.0));

    const ConjugateState poly = init_from_x0(ConjGrid(8), [](double u) {
        return 2.0 * std::pow(u, 4) - 0.5 * std::pow(u, 6) - 1.0;
    });
    CHECK(poly.x.front() == doctest::Approx(-1.0));
    CHECK(poly.x.back() == doctest::Approx(0.5));
    CHECK(poly.min_face_slope() >= 0.0);

    CHECK_THROWS_AS(init_from_x0(grid, [](double u) { return -u; }), DomainError);
}

TEST_CASE("interfaces and mass") {
    const ConjugateState s = init_from_x0(ConjGrid(16), cos_x0);
    const auto [l, r] = interfaces(s);
    CHECK(l == doctest::Approx(-1.0));
    CHECK(r == doctest::Approx(1.0));
    CHECK(mass(s) == doctest::Approx(2.0));
    const ConjugateState lin = init_from_x0(ConjGrid(16), [](double u) { return 2.0 * u - 1.0; });
    CHECK(interfaces(lin).first == doctest::Approx(-1.0));
    CHECK(interfaces(lin).second == doctest::Approx(1.0));
}

TEST_CASE("constant and linear states are steady") {
    const SolveConfig cfg = heat_config({1.0});
    ConjugateState flat;
    flat.t = 0.0;
    flat.h = 0.25;
    flat.x = {0.3, 0.3, 0.3, 0.3, 0.3};
    const ConjugateState after = step(flat, 1e-3, cfg);
    for (std::size_t i = 0; i < flat.x.size(); ++i) CHECK(after.x[i] == flat.x[i]);

    SolveConfig cfg3{FluxLaw::power(3.0)};
    cfg3.output_times = {1.0};
    const ConjugateState lin = init_from_x0(ConjGrid(16), [](double u) { return 2.0 * u - 1.0; });
    const ConjugateState lin_after = step(lin, 1e-3, cfg3);
    for (std::size_t i = 0; i < lin.x.size(); ++i) {
        CHECK(lin_after.x[i] == doctest::Approx(lin.x[i]).epsilon(1e-12));
    }
}

TEST_CASE("a small heat step matches the separated solution") {
    const int n = 64;
    const double dt = 1e-4;
    const ConjugateState s0 = init_from_x0(ConjGrid(n), cos_x0);
    SolveConfig cfg = heat_config({1.0});
    cfg.dt_max = 1e-3;
    const ConjugateState s1 = step(s0, dt, cfg);
    double err = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double exact = heat_reference(1.0, double(i) / n, dt).z;
        err = std::max(err, std::abs(s1.x[i] - exact));
    }
    const double h = 1.0 / n;
    CHECK(err <= 5.0 * (dt * dt + h * h));
}

TEST_CASE("heat run reproduces the exponential interface rate") {
    SolveConfig cfg = heat_config({0.3});
    const Trajectory traj = solve(ConjGrid(128), cos_x0, cfg);
    CHECK(!traj.extinction.has_value());
    const RateFit fit = fit_exponential(traj.right_series(), FitWindow{0.05, 0.3});
    CHECK(std::abs(-fit.exponent - kPi * kPi) / (kPi * kPi) < 0.01);
}

TEST_CASE("convergence order against the separated heat solution") {
    // dt tied to h^2 so both first-order time and second-order space halve
    // the error by 4 per refinement
    double prev = 0.0;
    for (int k = 0; k < 2; ++k) {
        const int n = 50 << k;
        const double h = 1.0 / n;
        SolveConfig cfg = heat_config({0.1});
        cfg.dt_init = cfg.dt_max = h * h;
        const Trajectory traj = solve(ConjGrid(n), cos_x0, cfg);
        double err = 0.0;
        for (int i = 0; i <= n; ++i) {
            err = std::max(err,
                           std::abs(traj.states[0].x[i] - heat_reference(1.0, i * h, 0.1).z));
        }
        if (k > 0) {
            const double ratio = prev / err;
            CHECK(ratio > 3.4);
            CHECK(ratio < 4.6);
        }
        prev = err;
    }
}

TEST_CASE("fast-diffusion run reaches extinction, slow-diffusion does not") {
    SolveConfig fast{FluxLaw::power(0.5)};
    fast.output_times = {10.0};
    fast.dt_max = 5e-4;
    const Trajectory ext = solve(ConjGrid(100), cos_x0, fast);
    REQUIRE(ext.extinction.has_value());
    CHECK(ext.extinction->t_est > 0.0);
    CHECK(ext.extinction->t_est < 1.0);
    CHECK(ext.steps.back().width <= 1e-3);

    SolveConfig slow{FluxLaw::power(3.0)};
    slow.output_times = {5.0};
    slow.dt_max = 5e-3;
    const Trajectory global = solve(ConjGrid(100), cos_x0, slow);
    CHECK(!global.extinction.has_value());
}

TEST_CASE("interfaces are monotone and the width shrinks") {
    for (double q : {0.5, 1.0, 3.0}) {
        SolveConfig cfg{FluxLaw::power(q)};
        cfg.output_times = {1.0};
        cfg.dt_max = 2e-3;
        const Trajectory traj = solve(ConjGrid(80), cos_x0, cfg);
        const double tol = 10.0 * cfg.newton_tol;
        for (std::size_t i = 1; i < traj.steps.size(); ++i) {
            CHECK(traj.steps[i].left >= traj.steps[i - 1].left - tol);
            CHECK(traj.steps[i].right <= traj.steps[i - 1].right + tol);
            CHECK(traj.steps[i].width <= traj.steps[i - 1].width + tol);
        }
    }
}

TEST_CASE("antisymmetric data stays antisymmetric") {
    SolveConfig cfg{FluxLaw::power(3.0)};
    cfg.output_times = {0.5};
    cfg.dt_max = 2e-3;
    const Trajectory traj = solve(ConjGrid(64), cos_x0, cfg);
    const auto& x = traj.states.back().x;
    const auto n = x.size() - 1;
    double worst = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        worst = std::max(worst, std::abs(x[i] + x[n - i]));
    }
    CHECK(worst <= 10.0 * cfg.newton_tol);
}

TEST_CASE("discrete comparison for ordered and translated data") {
    for (double q : {0.5, 1.0, 3.0}) {
        SolveConfig cfg{FluxLaw::power(q)};
        cfg.output_times = {0.02, 0.05, 0.1};
        cfg.dt_max = 1e-3;
        const ConjGrid grid(64);
        const Trajectory base = solve(grid, cos_x0, cfg);
        const Trajectory shifted =
            solve(grid, [](double u) { return cos_x0(u) + 0.1; }, cfg);
        CHECK(check_ordering(shifted, base) <= 10.0 * cfg.newton_tol);
        // translation invariance: the gap stays exactly 0.1
        double gap_err = 0.0;
        for (std::size_t k = 0; k < base.states.size(); ++k) {
            for (std::size_t i = 0; i < base.states[k].x.size(); ++i) {
                gap_err = std::max(gap_err, std::abs(shifted.states[k].x[i] -
                                                     base.states[k].x[i] - 0.1));
            }
        }
        CHECK(gap_err <= 1e-13);
    }
}

TEST_CASE("solver input validation") {
    SolveConfig cfg = heat_config({0.1});
    // flat interior segment rejected
    CHECK_THROWS_AS(solve(ConjGrid(8),
                          [](double u) { return u < 0.5 ? -0.5 : (u - 0.5); }, cfg),
                    DomainError);
    // inadmissible conjugate law (source flux unbounded at infinity)
    SolveConfig bad{FluxLaw::power(-2.0)};
    bad.output_times = {0.1};
    CHECK_THROWS_AS(solve(ConjGrid(8), cos_x0, bad), ConfigError);
    // unsorted output times
    SolveConfig unsorted = heat_config({0.2, 0.1});
    CHECK_THROWS_AS(solve(ConjGrid(8), cos_x0, unsorted), ConfigError);
}

TEST_CASE("an unreachable tolerance stalls with a partial trajectory") {
    SolveConfig cfg = heat_config({0.1});
    cfg.newton_tol = 1e-300; // below machine precision: every step fails
    cfg.newton_max_iter = 3;
    try {
        solve(ConjGrid(8), cos_x0, cfg);
        FAIL("expected a stall");
    } catch (const StallError& e) {
        CHECK(e.partial().steps.size() == 1); // just the initial record
    }
}

TEST_CASE("mass bookkeeping never increases") {
    SolveConfig cfg{FluxLaw::power(0.5)};
    cfg.output_times = {0.05};
    cfg.dt_max = 1e-3;
    const Trajectory traj = solve(ConjGrid(64), cos_x0, cfg);
    for (std::size_t i = 1; i < traj.steps.size(); ++i) {
        CHECK(traj.steps[i].width <= traj.steps[i - 1].width + 1e-10);
    }
}
