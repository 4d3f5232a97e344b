#ifndef STEEPFRONT_QUADRATURE_HPP
#define STEEPFRONT_QUADRATURE_HPP

#include <functional>

namespace steepfront {

/// 32-point Gauss-Legendre rule on [a, b]. Near machine precision for
/// analytic integrands.
double gauss_legendre(const std::function<double(double)>& f, double a, double b);

/// Adaptive Simpson quadrature with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-10, int max_depth = 40);

enum class IntegralStatus { Convergent, Divergent, Indeterminate };

struct ImproperIntegral {
    IntegralStatus status = IntegralStatus::Indeterminate;
    double value = 0.0;
};

/// Integral of f over (0, upper] with a possible singularity at 0, summed
/// over dyadic blocks. Divergence is declared when the partial sum exceeds
/// divergence_bound.
ImproperIntegral integrate_to_zero(const std::function<double(double)>& f, double upper,
                                   double abs_tol = 1e-10, double divergence_bound = 1e12);

/// Integral of f over [lower, infinity), summed over dyadic blocks.
ImproperIntegral integrate_to_infinity(const std::function<double(double)>& f, double lower,
                                       double abs_tol = 1e-10, double divergence_bound = 1e12);

} // namespace steepfront

#endif
