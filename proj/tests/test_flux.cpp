#include <doctest.h>

#include <cmath>
#include <vector>

#include "steepfront/error.hpp"
#include "steepfront/flux.hpp"
#include "steepfront/quadrature.hpp"

using namespace steepfront;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> s(n);
    for (int i = 0; i < n; ++i) s[i] = lo * std::pow(hi / lo, double(i) / (n - 1));
    return s;
}

} // namespace

TEST_CASE("power law flux values") {
    CHECK(FluxLaw::power(-1.0).flux(2.0) == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(FluxLaw::power(1.0).flux(3.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(FluxLaw::power(0.0).flux(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("curvature flux against a quadrature oracle") {
    // alpha = 0 closed form is arctan
    CHECK(FluxLaw::curvature(0.0).flux(1.0) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
    // independent oracle: direct adaptive quadrature of the diffusivity
    for (double alpha : {-0.3, 0.5, 1.0, 1.7}) {
        const FluxLaw law = FluxLaw::curvature(alpha);
        for (double s : {0.3, 1.0, 4.0, 50.0}) {
            const double oracle = adaptive_simpson(
                [alpha](double r) { return std::pow(1.0 + r * r, -(1.0 + alpha)); }, 0.0, s,
                1e-13);
            CHECK(law.flux(s) == doctest::Approx(oracle).epsilon(1e-10));
        }
    }
}

TEST_CASE("diffusivity values") {
    CHECK(FluxLaw::power(-3.0).diffusivity(2.0) == doctest::Approx(0.0625).epsilon(1e-14));
    CHECK(FluxLaw::curvature(1.0).diffusivity(1.0) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(FluxLaw::power(0.0).diffusivity(4.0) == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("domain errors on non-positive arguments") {
    const FluxLaw law = FluxLaw::power(2.0);
    CHECK_THROWS_AS(law.flux(0.0), DomainError);
    CHECK_THROWS_AS(law.flux(-1.0), DomainError);
    CHECK_THROWS_AS(law.diffusivity(0.0), DomainError);
}

TEST_CASE("custom law with non-positive diffusivity is rejected") {
    const FluxLaw bad = FluxLaw::custom([](double s) { return s; },
                                        [](double) { return -1.0; }, "bad");
    CHECK_THROWS_AS(bad.diffusivity(1.0), InvalidLawError);
}

TEST_CASE("conjugate of a power law is the power law with negated exponent") {
    const FluxLaw conj1 = conjugate(FluxLaw::power(-1.0));
    for (double s : {0.5, 1.0, 2.0, 7.0}) {
        CHECK(conj1.flux(s) == doctest::Approx(s).epsilon(1e-14));
    }
    const FluxLaw conj3 = conjugate(FluxLaw::power(-3.0));
    for (double s : {0.5, 1.0, 2.0}) {
        CHECK(conj3.flux(s) == doctest::Approx(s * s * s / 3.0).epsilon(1e-14));
    }
    // the logarithmic law is self-conjugate
    const FluxLaw conj0 = conjugate(FluxLaw::power(0.0));
    CHECK(conj0.flux(2.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("conjugation is an involution") {
    const std::vector<FluxLaw> laws = {
        FluxLaw::power(-2.0), FluxLaw::power(1.5), FluxLaw::power(0.0),
        FluxLaw::curvature(1.0),
        FluxLaw::custom([](double s) { return std::atan(s); },
                        [](double s) { return 1.0 / (1.0 + s * s); }, "atan")};
    for (const auto& law : laws) {
        const FluxLaw twice = conjugate(conjugate(law));
        for (double s : log_spaced(1e-3, 1e3, 101)) {
            const double a = law.flux(s);
            const double b = twice.flux(s);
            CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
        }
    }
}

TEST_CASE("conjugate derivative identity") {
    for (const auto& law : {FluxLaw::power(-3.0), FluxLaw::curvature(1.0)}) {
        const FluxLaw conj = conjugate(law);
        for (double s : log_spaced(1e-2, 1e2, 41)) {
            const double lhs = conj.diffusivity(s) * s * s;
            const double rhs = law.diffusivity(1.0 / s);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
}

TEST_CASE("built-in laws are strictly increasing") {
    for (const auto& law : {FluxLaw::power(-2.0), FluxLaw::power(0.0), FluxLaw::power(3.0),
                            FluxLaw::curvature(0.0), FluxLaw::curvature(1.0)}) {
        const auto s = log_spaced(1e-3, 1e3, 121);
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            CHECK(law.flux(s[i + 1]) > law.flux(s[i]));
        }
    }
}

TEST_CASE("power classification table") {
    const Classification c2 = classify(FluxLaw::power(2.0));
    CHECK(c2.flux_bounded_at_infinity == false);
    CHECK(c2.finite_interfaces_type_i == true);
    CHECK(c2.finite_mass_existence == true);
    CHECK(!c2.asymptotic_q.has_value());

    const Classification cm3 = classify(FluxLaw::power(-3.0));
    CHECK(cm3.flux_bounded_at_infinity == true);
    CHECK(cm3.finite_interfaces_type_i == false);
    CHECK(cm3.finite_mass_existence == false);
    CHECK(cm3.asymptotic_q == doctest::Approx(3.0));

    // thresholds exactly: m < 0, m > 1, m > -1
    for (double m : {-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.5}) {
        const Classification c = classify(FluxLaw::power(m));
        CHECK(*c.flux_bounded_at_infinity == (m < 0.0));
        CHECK(*c.finite_interfaces_type_i == (m > 1.0));
        CHECK(*c.finite_mass_existence == (m > -1.0));
    }
}

TEST_CASE("curvature classification with quadrature oracle") {
    const Classification c = classify(FluxLaw::curvature(1.0));
    CHECK(c.flux_bounded_at_infinity == true);
    CHECK(c.finite_interfaces_type_i == false);
    CHECK(c.finite_mass_existence == true);
    CHECK(c.asymptotic_q == doctest::Approx(3.0));

    // oracle: the improper diffusivity integral over (0, inf) converges
    const auto tail = integrate_to_infinity(
        [](double s) { return std::pow(1.0 + s * s, -2.0); }, 1.0);
    CHECK(tail.status == IntegralStatus::Convergent);
}

TEST_CASE("custom law classification via quadrature") {
    // diffusivity e^{-s}: bounded flux, no finite interfaces (1/s tail),
    // finite mass
    const FluxLaw law = FluxLaw::custom(
        [](double s) { return 1.0 - std::exp(-s); }, [](double s) { return std::exp(-s); },
        "exp");
    const Classification c = classify(law);
    CHECK(c.flux_bounded_at_infinity == true);
    CHECK(c.finite_interfaces_type_i == false);
    CHECK(c.finite_mass_existence == true);

    // power-tail custom law recovers its conjugate exponent from the slope
    const FluxLaw tail = FluxLaw::custom(
        [](double s) { return -std::pow(s, -3.0) / 3.0; },
        [](double s) { return std::pow(s, -4.0); }, "m=-3 lookalike");
    const Classification ct = classify(tail);
    CHECK(ct.asymptotic_q.has_value());
    CHECK(*ct.asymptotic_q == doctest::Approx(3.0).epsilon(1e-6));
}

TEST_CASE("pressure closed forms and quadrature") {
    // power m=2: integrand is 1 on (0, 1)
    CHECK(pressure(FluxLaw::power(2.0), 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    // empty integral
    CHECK(pressure(FluxLaw::power(-1.0), 2.0, 2.0) == 0.0);
    // m=0: diffusivity 1/s, integrand s^{-2}
    CHECK(pressure(FluxLaw::power(0.0), 2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    // base point 0 with a divergent integrand
    CHECK_THROWS_AS(pressure(FluxLaw::power(1.0), 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(pressure(FluxLaw::curvature(1.0), 1.0, 0.0), DomainError);
    // quadrature path agrees with the closed power form
    const FluxLaw like_m2 = FluxLaw::custom(
        [](double s) { return s * s / 2.0; }, [](double s) { return s; }, "m=2 lookalike");
    CHECK(pressure(like_m2, 1.0, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pressure(FluxLaw::curvature(1.0), 2.0, 1.0) ==
          doctest::Approx(adaptive_simpson(
                              [](double s) { return std::pow(1.0 + s * s, -2.0) / s; }, 1.0,
                              2.0, 1e-13))
              .epsilon(1e-10));
}

TEST_CASE("conjugate admissibility") {
    CHECK(conjugate_admissible(FluxLaw::power(1.0)));
    CHECK(conjugate_admissible(FluxLaw::power(0.5)));
    CHECK(conjugate_admissible(FluxLaw::power(3.0)));
    CHECK_FALSE(conjugate_admissible(FluxLaw::power(-1.0)));
    CHECK_FALSE(conjugate_admissible(FluxLaw::power(0.0))); // log law diverges at 0
    CHECK(conjugate_admissible(conjugate(FluxLaw::curvature(1.0))));
    CHECK_FALSE(conjugate_admissible(conjugate(FluxLaw::power(2.0))));
}
