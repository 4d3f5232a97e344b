#include <doctest.h>

#include <cmath>
#include <vector>

#include "steepfront/analysis.hpp"
#include "steepfront/error.hpp"
#include "steepfront/selfsim.hpp"
#include "steepfront/transform.hpp"

using namespace steepfront;

namespace {

constexpr double kPi = 3.14159265358979323846;

MonotoneProfile sampled_profile(double (*u0)(double), double a, double b, int n) {
    std::vector<double> xs(n), us(n);
    for (int i = 0; i < n; ++i) {
        xs[i] = a + (b - a) * i / (n - 1);
        us[i] = u0(xs[i]);
    }
    us[0] = 0.0;
    us[n - 1] = 1.0;
    return MonotoneProfile(std::move(xs), std::move(us));
}

double linear_u0(double x) { return (x + 1.0) / 2.0; }
double arccos_u0(double x) { return std::acos(-x) / kPi; }

} // namespace

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(MonotoneProfile({0.0, 1.0}, {0.0, 0.5}), DomainError);
    CHECK_THROWS_AS(MonotoneProfile({0.0, 0.5, 1.0}, {0.0, 0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(MonotoneProfile({0.0, 0.0, 1.0}, {0.0, 0.5, 1.0}), DomainError);
    const MonotoneProfile p({-1.0, 0.0, 1.0}, {0.0, 0.5, 1.0});
    CHECK(p.min_slope() == doctest::Approx(0.5));
}

TEST_CASE("linear profile inverts exactly") {
    const MonotoneProfile p = sampled_profile(linear_u0, -1.0, 1.0, 33);
    const ConjGrid grid(16);
    const ConjugateState s = conj_initial_data(p, grid);
    for (int i = 0; i <= 16; ++i) {
        CHECK(s.x[i] == doctest::Approx(2.0 * grid.node(i) - 1.0).epsilon(1e-14));
    }
    for (int i = 0; i < s.n_faces(); ++i) CHECK(s.face_slope(i) == doctest::Approx(2.0));
    CHECK(roundtrip_residual(p, grid) <= 1e-12);
}

TEST_CASE("arccos profile recovers the cosine inverse") {
    const MonotoneProfile p = sampled_profile(arccos_u0, -1.0, 1.0, 4097);
    const ConjGrid grid(32);
    const ConjugateState s = conj_initial_data(p, grid);
    for (int i = 0; i <= 32; ++i) {
        CHECK(s.x[i] == doctest::Approx(-std::cos(kPi * grid.node(i))).epsilon(1e-4));
    }
}

TEST_CASE("polynomial data roundtrips through its own samples") {
    auto x0 = [](double u) { return 2.0 * std::pow(u, 4) - 0.5 * std::pow(u, 6) - 1.0; };
    const int n = 2049;
    std::vector<double> xs(n), us(n);
    for (int i = 0; i < n; ++i) {
        us[i] = double(i) / (n - 1);
        xs[i] = x0(us[i]);
    }
    const MonotoneProfile p(std::move(xs), std::move(us));
    const ConjGrid grid(64);
    const ConjugateState s = conj_initial_data(p, grid);
    for (int i = 0; i <= 64; ++i) {
        CHECK(s.x[i] == doctest::Approx(x0(grid.node(i))).epsilon(1e-6));
    }
    CHECK(roundtrip_residual(p, ConjGrid(256)) <= 1e-3);
}

TEST_CASE("roundtrip residual is second order in the grid") {
    const MonotoneProfile p = sampled_profile(arccos_u0, -1.0, 1.0, 8193);
    const double coarse = roundtrip_residual(p, ConjGrid(32));
    const double fine = roundtrip_residual(p, ConjGrid(64));
    CHECK(coarse / fine >= 3.0);
}

TEST_CASE("reconstruct inverts the inversion") {
    const MonotoneProfile p = sampled_profile(linear_u0, -1.0, 1.0, 65);
    const ConjugateState s = conj_initial_data(p, ConjGrid(32));
    const SolutionFrame f = reconstruct(s);
    CHECK(f.l == doctest::Approx(-1.0));
    CHECK(f.r == doctest::Approx(1.0));
    CHECK(f.center_c == doctest::Approx(0.0).epsilon(1e-14));
    for (std::size_t i = 0; i < f.x.size(); ++i) {
        CHECK(f.u[i] == doctest::Approx(linear_u0(f.x[i])).epsilon(1e-12));
        CHECK(f.x[i] >= f.l);
        CHECK(f.x[i] <= f.r);
    }

    ConjugateState bad = s;
    bad.x[3] = bad.x[5]; // make it locally decreasing
    CHECK_THROWS_AS(reconstruct(bad), IntegrityError);
}

TEST_CASE("gradient profile is the reciprocal slope") {
    const MonotoneProfile p = sampled_profile(linear_u0, -1.0, 1.0, 65);
    const ConjugateState s = conj_initial_data(p, ConjGrid(16));
    const auto grads = gradient_profile(s);
    CHECK(grads.size() == 16);
    for (const auto& g : grads) {
        CHECK(g.v == doctest::Approx(0.5));
        CHECK(g.v * (1.0 / g.v) == doctest::Approx(1.0)); // v * w = 1 by construction
    }
    ConjugateState flat = s;
    flat.x[8] = flat.x[7];
    CHECK_THROWS_AS(gradient_profile(flat), IntegrityError);
}

TEST_CASE("heat-case frame has square-root endpoint structure") {
    // frame of the separated linear solution: u rises like d^{1/2} near the
    // interfaces
    const int n = 400;
    ConjugateState s;
    s.t = 0.1;
    s.h = 1.0 / n;
    s.x.resize(n + 1);
    for (int i = 0; i <= n; ++i) s.x[i] = heat_reference(1.0, double(i) / n, 0.1).z;
    const SolutionFrame f = reconstruct(s);
    const RateFit left = fit_endpoint_exponent(f, true, 2.0 / n, 0.15);
    CHECK(std::abs(left.exponent - 0.5) <= 0.05);
    const RateFit right = fit_endpoint_exponent(f, false, 2.0 / n, 0.15);
    CHECK(std::abs(right.exponent - 0.5) <= 0.05);
}
