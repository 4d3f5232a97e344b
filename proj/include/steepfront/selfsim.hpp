#ifndef STEEPFRONT_SELFSIM_HPP
#define STEEPFRONT_SELFSIM_HPP

#include <vector>

namespace steepfront {

/// Separated solution of the linear (q = 1) conjugate problem:
///   slope(u, t) = C pi e^{-pi^2 t} sin(pi u)
///   z(u, t)     = -C e^{-pi^2 t} cos(pi u)
struct HeatReference {
    double slope; // du-derivative of z
    double z;
};

HeatReference heat_reference(double amplitude_c, double u, double t);

/// Positive solution of (f^q)'' + mu f = 0 on [0, 1] with f(0) = f(1) = 0,
/// mu = q/|q-1|. The profile is unique (no scaling freedom); it is computed
/// by shooting on g = f^q with bisection on g'(0) until the maximum of g
/// sits at u = 1/2.
struct EigenProfile {
    double q = 0.0;
    double mu = 0.0;
    double slope0 = 0.0;   // g'(0), the shooting parameter
    std::vector<double> u; // uniform sample grid on [0, 1]
    std::vector<double> f;

    /// Linear interpolation of f at uu in [0, 1].
    double value(double uu) const;
    double max_value() const;
};

EigenProfile eigenprofile(double q, int n_samples = 4001);

/// Increasing self-similar profile F on [-K, K] joining 0 to 1, with
///   F'(xi) = A (K^2 - xi^2)^{-1/(2+2a)},  A = (2a/(1+a))^{1/(2+2a)},
/// and K fixed by total rise 1.
struct SimilarityProfile {
    double alpha = 0.0;
    double amplitude_a = 0.0;
    double half_width_k = 0.0;
    std::vector<double> xi;
    std::vector<double> f;
};

SimilarityProfile similarity_profile(double alpha, int n_samples = 1001);

enum class Regime { Exponential, PowerDecay, FiniteExtinction };

/// Predicted large-time rates for the conjugate exponent q > 0.
///   q = 1: interfaces decay like e^{-pi^2 t}; gradients grow like e^{+pi^2 t}.
///   q > 1: interfaces ~ t^{-1/(q-1)}, gradients ~ t^{+1/(q-1)}.
///   q < 1: interfaces ~ (T-t)^{1/(1-q)}, gradients ~ (T-t)^{-1/(1-q)}.
/// Near an interface at distance d the profile rises like d^{q/(q+1)} and
/// its gradient blows up like d^{-1/(q+1)}.
struct RatePrediction {
    double q = 0.0;
    Regime regime = Regime::Exponential;
    double interface_exponent = 0.0; // e-folding rate for q = 1
    double gradient_exponent = 0.0;
    double endpoint_exponent = 0.0;       // q/(q+1)
    double gamma_interface_blowup = 0.0;  // 1/(q+1)
};

RatePrediction rate_predictions(double q);

} // namespace steepfront

#endif
