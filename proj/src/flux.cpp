#include "steepfront/flux.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "steepfront/error.hpp"
#include "steepfront/quadrature.hpp"

namespace steepfront {

namespace {

void require_positive(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw DomainError("flux law argument must be positive and finite, got " +
                          std::to_string(s));
    }
}

double power_flux(double m, double s) {
    if (m == 0.0) return std::log(s);
    return std::pow(s, m) / m;
}

// phi(s) = int_0^s (1+r^2)^{-(1+a)} dr = int_0^{atan s} cos(t)^{2a} dt.
// Closed forms for the model cases a = 0 and a = 1; otherwise adaptive
// quadrature in the angle, which also absorbs the integrable endpoint
// singularity at pi/2 when a < 0.
double curvature_flux(double alpha, double s) {
    if (alpha == 0.0) return std::atan(s);
    if (alpha == 1.0) return 0.5 * (std::atan(s) + s / (1.0 + s * s));
    const double theta = std::atan(s);
    auto integrand = [alpha](double t) { return std::pow(std::cos(t), 2.0 * alpha); };
    return adaptive_simpson(integrand, 0.0, theta, 1e-14, 48);
}

double curvature_diffusivity(double alpha, double s) {
    return std::pow(1.0 + s * s, -(1.0 + alpha));
}

} // namespace

FluxLaw FluxLaw::power(double m) {
    return FluxLaw(PowerLaw{m}, "power(m=" + std::to_string(m) + ")");
}

FluxLaw FluxLaw::curvature(double alpha) {
    if (!std::isfinite(alpha)) throw DomainError("curvature exponent must be finite");
    return FluxLaw(CurvatureLaw{alpha}, "curvature(alpha=" + std::to_string(alpha) + ")");
}

FluxLaw FluxLaw::custom(std::function<double(double)> flux,
                        std::function<double(double)> diffusivity, std::string description) {
    if (!flux || !diffusivity) {
        throw InvalidLawError("custom law requires both flux and diffusivity callables");
    }
    return FluxLaw(CustomLaw{std::move(flux), std::move(diffusivity)}, std::move(description));
}

double FluxLaw::flux(double s) const {
    require_positive(s);
    if (const auto* p = std::get_if<PowerLaw>(&family_)) return power_flux(p->m, s);
    if (const auto* c = std::get_if<CurvatureLaw>(&family_)) return curvature_flux(c->alpha, s);
    const auto& u = std::get<CustomLaw>(family_);
    const double v = u.flux(s);
    if (!std::isfinite(v)) {
        throw InvalidLawError(description_ + ": flux(" + std::to_string(s) + ") is not finite");
    }
    return v;
}

double FluxLaw::diffusivity(double s) const {
    require_positive(s);
    if (const auto* p = std::get_if<PowerLaw>(&family_)) return std::pow(s, p->m - 1.0);
    if (const auto* c = std::get_if<CurvatureLaw>(&family_)) {
        return curvature_diffusivity(c->alpha, s);
    }
    const auto& u = std::get<CustomLaw>(family_);
    const double v = u.diffusivity(s);
    if (!std::isfinite(v) || v <= 0.0) {
        throw InvalidLawError(description_ + ": diffusivity must be positive, got " +
                              std::to_string(v) + " at s=" + std::to_string(s));
    }
    return v;
}

FluxLaw conjugate(const FluxLaw& law) {
    if (const auto* p = law.as_power()) {
        // -phi(1/s) = -(1/m) s^{-m} = s^q / q with q = -m; exact for m = 0 too
        return FluxLaw::power(-p->m);
    }
    return FluxLaw::custom([law](double s) { return -law.flux(1.0 / s); },
                           [law](double s) { return law.diffusivity(1.0 / s) / (s * s); },
                           "conjugate of " + law.description());
}

namespace {

// Large-gradient diagnostic: the log-log slope of the diffusivity over
// s in [1e2, 1e4] estimates the power tail phi'(s) ~ s^{-(q+1)}.
std::optional<double> asymptotic_q_estimate(const FluxLaw& law) {
    const double lo = 1e2, hi = 1e4;
    const int n = 41;
    std::vector<double> xs(n), ys(n);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        const double s = lo * std::pow(hi / lo, double(i) / (n - 1));
        double d;
        try {
            d = law.diffusivity(s);
        } catch (const Error&) {
            return std::nullopt;
        }
        if (!(d > 0.0)) return std::nullopt;
        xs[i] = std::log(s);
        ys[i] = -std::log(d);
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double q = slope - 1.0;
    if (!std::isfinite(q) || q <= 0.0) return std::nullopt;
    return q;
}

std::optional<bool> status_to_bool(IntegralStatus s) {
    switch (s) {
    case IntegralStatus::Convergent: return true;
    case IntegralStatus::Divergent: return false;
    default: return std::nullopt;
    }
}

} // namespace

Classification classify(const FluxLaw& law) {
    Classification c;
    if (const auto* p = law.as_power()) {
        const double m = p->m;
        c.flux_bounded_at_infinity = m < 0.0;
        c.finite_interfaces_type_i = m > 1.0;  // integrand s^{m-2} at 0
        c.finite_mass_existence = m > -1.0;    // integrand s^m at 0
        if (m < 0.0) c.asymptotic_q = -m;
        return c;
    }
    if (const auto* cv = law.as_curvature()) {
        const double a = cv->alpha;
        c.flux_bounded_at_infinity = a > -0.5;   // phi' ~ s^{-2-2a} at infinity
        c.finite_interfaces_type_i = false;      // phi'(s)/s ~ 1/s at 0
        c.finite_mass_existence = true;          // phi'(s)*s ~ s at 0
        if (a > -0.5) c.asymptotic_q = 1.0 + 2.0 * a;
        return c;
    }
    auto diff = [&law](double s) { return law.diffusivity(s); };
    try {
        c.flux_bounded_at_infinity =
            status_to_bool(integrate_to_infinity(diff, 1.0).status);
        c.finite_interfaces_type_i = status_to_bool(
            integrate_to_zero([&law](double s) { return law.diffusivity(s) / s; }, 1.0).status);
        c.finite_mass_existence = status_to_bool(
            integrate_to_zero([&law](double s) { return law.diffusivity(s) * s; }, 1.0).status);
    } catch (const Error&) {
        // leave whatever could not be evaluated unset
    }
    if (c.flux_bounded_at_infinity.value_or(false)) {
        c.asymptotic_q = asymptotic_q_estimate(law);
    }
    return c;
}

double pressure(const FluxLaw& law, double v, double a) {
    require_positive(v);
    if (a < 0.0) throw DomainError("pressure base point must be nonnegative");
    if (a == v) return 0.0;
    if (const auto* p = law.as_power()) {
        const double m = p->m;
        // integrand s^{m-2}
        if (a == 0.0) {
            if (m <= 1.0) {
                throw DomainError("pressure base point 0 requires an integrable "
                                  "diffusivity(s)/s near 0 (power exponent > 1)");
            }
            return std::pow(v, m - 1.0) / (m - 1.0);
        }
        if (m == 1.0) return std::log(v / a);
        return (std::pow(v, m - 1.0) - std::pow(a, m - 1.0)) / (m - 1.0);
    }
    auto integrand = [&law](double s) { return law.diffusivity(s) / s; };
    if (a == 0.0) {
        if (law.as_curvature() != nullptr) {
            throw DomainError("pressure base point 0 is inadmissible for curvature "
                              "laws: diffusivity(s)/s ~ 1/s near 0");
        }
        const auto head = integrate_to_zero(integrand, std::min(v, 1.0));
        if (head.status != IntegralStatus::Convergent) {
            throw DomainError("pressure base point 0 requires an integrable "
                              "diffusivity(s)/s near 0");
        }
        const double tail = (v > 1.0) ? adaptive_simpson(integrand, 1.0, v) : 0.0;
        return head.value + tail;
    }
    return adaptive_simpson(integrand, a, v);
}

bool conjugate_admissible(const FluxLaw& psi) {
    if (const auto* p = psi.as_power()) return p->m > 0.0;
    // numeric probe: the value must approach a finite limit as s -> 0+
    double a, b;
    try {
        a = psi.flux(1e-8);
        b = psi.flux(1e-10);
    } catch (const Error&) {
        return false;
    }
    if (!std::isfinite(a) || !std::isfinite(b)) return false;
    return std::abs(a - b) <= 1e-3 * (1.0 + std::abs(b));
}

} // namespace steepfront
