#include <doctest.h>

#include <cmath>

#include "steepfront/error.hpp"
#include "steepfront/quadrature.hpp"
#include "steepfront/selfsim.hpp"

using namespace steepfront;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Closed-form constants of the eigenprofile problem g'' = -mu g^{1/q}:
// the energy integral pins the initial slope that puts the peak at 1/2.
struct EigenOracle {
    double mu, p, slope0, g_max, f_max;

    explicit EigenOracle(double q) {
        mu = q / std::abs(q - 1.0);
        p = 1.0 / q;
        const double beta =
            std::exp(std::lgamma(1.0 / (p + 1.0)) + std::lgamma(0.5) -
                     std::lgamma(1.0 / (p + 1.0) + 0.5));
        const double ip = beta / (p + 1.0);
        slope0 = std::pow(2.0 * ip * std::pow((p + 1.0) / (2.0 * mu), 1.0 / (p + 1.0)),
                          (p + 1.0) / (p - 1.0));
        g_max = slope0 / (2.0 * ip);
        f_max = std::pow(g_max, p);
    }
};

} // namespace

TEST_CASE("heat reference identities") {
    CHECK(heat_reference(1.0, 0.5, 0.37).z == doctest::Approx(0.0).epsilon(1e-14));
    // t = 0, C = 1 spans [-1, 1]
    CHECK(heat_reference(1.0, 0.0, 0.0).z == doctest::Approx(-1.0));
    CHECK(heat_reference(1.0, 1.0, 0.0).z == doctest::Approx(1.0));
    // dz/du equals the slope field to second order
    const double h = 1e-5;
    for (double u : {0.2, 0.5, 0.8}) {
        const double fd =
            (heat_reference(2.0, u + h, 0.1).z - heat_reference(2.0, u - h, 0.1).z) /
            (2.0 * h);
        CHECK(fd == doctest::Approx(heat_reference(2.0, u, 0.1).slope).epsilon(1e-8));
    }
}

TEST_CASE("eigenprofile matches its closed-form constants") {
    for (double q : {3.0, 0.5}) {
        const EigenOracle oracle(q);
        const EigenProfile prof = eigenprofile(q, 4001);
        CHECK(prof.mu == doctest::Approx(oracle.mu));
        CHECK(prof.slope0 == doctest::Approx(oracle.slope0).epsilon(1e-8));
        CHECK(prof.max_value() == doctest::Approx(oracle.f_max).epsilon(1e-8));
    }
}

TEST_CASE("eigenprofile symmetry and positivity") {
    const EigenProfile prof = eigenprofile(3.0, 2001);
    const auto n = prof.f.size();
    double gap = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        gap = std::max(gap, std::abs(prof.f[i] - prof.f[n - 1 - i]));
    }
    CHECK(gap <= 1e-10);
    CHECK(prof.f.front() == 0.0);
    CHECK(prof.f.back() == 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) CHECK(prof.f[i] > 0.0);
}

TEST_CASE("eigenprofile plug-in residual") {
    // residual of (f^q)'' + mu f via central differences of g = f^q on the
    // sampled grid, away from the endpoint singularity of g''''
    for (double q : {3.0, 0.5}) {
        const EigenProfile prof = eigenprofile(q, 20001);
        const double h = prof.u[1] - prof.u[0];
        double worst = 0.0;
        for (std::size_t i = 1; i + 1 < prof.u.size(); ++i) {
            if (prof.u[i] < 0.02 || prof.u[i] > 0.98) continue;
            const double gm = std::pow(prof.f[i - 1], q);
            const double g0 = std::pow(prof.f[i], q);
            const double gp = std::pow(prof.f[i + 1], q);
            const double resid = (gp - 2.0 * g0 + gm) / (h * h) + prof.mu * prof.f[i];
            worst = std::max(worst, std::abs(resid));
        }
        CHECK(worst <= 1e-6);
    }
}

TEST_CASE("eigenprofile endpoint exponent is 1/q") {
    for (double q : {3.0, 0.5}) {
        const EigenProfile prof = eigenprofile(q, 20001);
        // log-log slope of f against u over u in [1e-4, 1e-3]
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (std::size_t i = 1; i < prof.u.size(); ++i) {
            if (prof.u[i] < 1e-4 || prof.u[i] > 1e-3 || prof.f[i] <= 0.0) continue;
            const double x = std::log(prof.u[i]);
            const double y = std::log(prof.f[i]);
            sx += x; sy += y; sxx += x * x; sxy += x * y;
            ++n;
        }
        const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        CHECK(std::abs(slope - 1.0 / q) <= 0.05 / q);
    }
}

TEST_CASE("eigenprofile rejects the linear case and bad arguments") {
    CHECK_THROWS_AS(eigenprofile(1.0), DomainError);
    CHECK_THROWS_AS(eigenprofile(-2.0), DomainError);
    CHECK_THROWS_AS(eigenprofile(3.0, 10), DomainError);
}

TEST_CASE("similarity profile amplitude, normalization and monotonicity") {
    const SimilarityProfile sp = similarity_profile(1.0, 801);
    CHECK(sp.amplitude_a == doctest::Approx(1.0).epsilon(1e-14)); // (2/2)^{1/4}
    CHECK(sp.f.front() == 0.0);
    CHECK(sp.f.back() == 1.0);
    // F(0) = 1/2 by symmetry (odd sample count puts a node at xi = 0)
    CHECK(sp.f[400] == doctest::Approx(0.5).epsilon(1e-12));
    for (std::size_t i = 0; i + 1 < sp.f.size(); ++i) CHECK(sp.f[i + 1] > sp.f[i]);

    // oracle for K: 1 = A K^{1-2b} J with J from the beta function
    const double beta = 0.25;
    const double j = std::exp(std::lgamma(0.75) + std::lgamma(0.5) - std::lgamma(1.25));
    const double k_oracle = std::pow(1.0 * j, -1.0 / (1.0 - 2.0 * beta));
    CHECK(sp.half_width_k == doctest::Approx(k_oracle).epsilon(1e-12));

    // and for a second alpha the rise integrates to 1 (quadrature oracle)
    const SimilarityProfile sp2 = similarity_profile(0.6, 801);
    const double b2 = 1.0 / 3.2;
    const double rise = adaptive_simpson(
        [&](double t) {
            return sp2.amplitude_a *
                   std::pow(sp2.half_width_k * std::cos(t), 1.0 - 2.0 * b2);
        },
        -kPi / 2.0, kPi / 2.0, 1e-12);
    CHECK(rise == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(similarity_profile(-1.0), DomainError);
}

TEST_CASE("rate predictions") {
    const RatePrediction p1 = rate_predictions(1.0);
    CHECK(p1.regime == Regime::Exponential);
    CHECK(p1.interface_exponent == doctest::Approx(-kPi * kPi));
    CHECK(p1.endpoint_exponent == doctest::Approx(0.5));

    const RatePrediction p3 = rate_predictions(3.0);
    CHECK(p3.regime == Regime::PowerDecay);
    CHECK(p3.interface_exponent == doctest::Approx(-0.5));
    CHECK(p3.gradient_exponent == doctest::Approx(0.5));
    CHECK(p3.endpoint_exponent == doctest::Approx(0.75));
    CHECK(p3.gamma_interface_blowup == doctest::Approx(0.25));

    const RatePrediction ph = rate_predictions(0.5);
    CHECK(ph.regime == Regime::FiniteExtinction);
    CHECK(ph.interface_exponent == doctest::Approx(2.0));

    CHECK_THROWS_AS(rate_predictions(0.0), DomainError);
    CHECK_THROWS_AS(rate_predictions(-1.0), DomainError);

    // total on q > 0 and regime boundaries exact at q = 1
    for (double q = 0.1; q < 3.05; q += 0.1) {
        const RatePrediction p = rate_predictions(q);
        if (q < 1.0) CHECK(p.regime == Regime::FiniteExtinction);
        if (q > 1.0) CHECK(p.regime == Regime::PowerDecay);
    }
}
