#ifndef STEEPFRONT_FLUX_HPP
#define STEEPFRONT_FLUX_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace steepfront {

/// phi(s) = s^m / m for m != 0, phi(s) = log(s) for m = 0.
struct PowerLaw {
    double m;
};

/// phi'(s) = (1 + s^2)^{-(1+alpha)}, normalized so phi(0) = 0.
struct CurvatureLaw {
    double alpha;
};

/// User-supplied law. The diffusivity must be given explicitly; it is
/// checked to be finite and positive on every evaluation.
struct CustomLaw {
    std::function<double(double)> flux;
    std::function<double(double)> diffusivity;
};

/// A constitutive flux law: a smooth, strictly increasing function of the
/// gradient on (0, inf). Immutable after construction; all operations are
/// pure, so values can be freely shared across threads.
class FluxLaw {
public:
    static FluxLaw power(double m);
    static FluxLaw curvature(double alpha);
    static FluxLaw custom(std::function<double(double)> flux,
                          std::function<double(double)> diffusivity,
                          std::string description);

    /// Flux value phi(s); requires s > 0.
    double flux(double s) const;
    /// Diffusivity phi'(s) > 0; requires s > 0.
    double diffusivity(double s) const;

    const std::string& description() const { return description_; }

    const PowerLaw* as_power() const { return std::get_if<PowerLaw>(&family_); }
    const CurvatureLaw* as_curvature() const { return std::get_if<CurvatureLaw>(&family_); }

private:
    template <typename Family>
    FluxLaw(Family f, std::string d) : family_(std::move(f)), description_(std::move(d)) {}

    std::variant<PowerLaw, CurvatureLaw, CustomLaw> family_;
    std::string description_;
};

/// Behaviour descriptors decided by the integral criteria. For the built-in
/// families the answers are closed-form; for custom laws they come from
/// adaptive quadrature, and a field is left unset when the quadrature
/// neither settles nor blows up.
struct Classification {
    std::optional<bool> flux_bounded_at_infinity; // finite flux(inf): focusing admissible
    std::optional<bool> finite_interfaces_type_i; // integral of diffusivity(s)/s converges at 0
    std::optional<bool> finite_mass_existence;    // integral of diffusivity(s)*s converges at 0
    std::optional<double> asymptotic_q;           // conjugate exponent governing large gradients
};

/// The conjugate law psi(s) = -phi(1/s), psi'(s) = phi'(1/s)/s^2.
/// Conjugation is an involution; a power law with exponent m maps to the
/// power law with exponent -m.
FluxLaw conjugate(const FluxLaw& law);

Classification classify(const FluxLaw& law);

/// Pressure p = integral of diffusivity(s)/s over [a, v]. The base point
/// a = 0 is admissible only when the integrand is integrable at 0.
double pressure(const FluxLaw& law, double v, double a);

/// True when the law can drive the conjugate (focusing) problem, i.e. its
/// value stays finite as s -> 0+.
bool conjugate_admissible(const FluxLaw& psi);

} // namespace steepfront

#endif
