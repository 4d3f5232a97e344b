#include "steepfront/selfsim.hpp"

#include <algorithm>
#include <cmath>

#include "steepfront/error.hpp"
#include "steepfront/quadrature.hpp"

namespace steepfront {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

HeatReference heat_reference(double amplitude_c, double u, double t) {
    HeatReference out;
    const double decay = std::exp(-kPi * kPi * t);
    out.slope = amplitude_c * kPi * decay * std::sin(kPi * u);
    out.z = -amplitude_c * decay * std::cos(kPi * u);
    return out;
}

namespace {

// g'' = -mu g^p with g(0) = 0, g'(0) = slope0; p = 1/q. The right-hand side
// is not Lipschitz at g = 0 when p < 1, so integration starts from the
// series g(u) = s0 u - mu s0^p u^{2+p} / ((1+p)(2+p)).
struct ShootState {
    double g, gp;
};

struct ShootOde {
    double mu, p;

    double accel(double g) const { return -mu * std::pow(std::max(g, 0.0), p); }

    ShootState series_start(double slope0, double u) const {
        const double c = mu * std::pow(slope0, p) / ((1.0 + p) * (2.0 + p));
        ShootState s;
        s.g = slope0 * u - c * std::pow(u, 2.0 + p);
        s.gp = slope0 - c * (2.0 + p) * std::pow(u, 1.0 + p);
        return s;
    }

    ShootState rk4(const ShootState& s, double du) const {
        const double k1g = s.gp, k1p = accel(s.g);
        const double k2g = s.gp + 0.5 * du * k1p, k2p = accel(s.g + 0.5 * du * k1g);
        const double k3g = s.gp + 0.5 * du * k2p, k3p = accel(s.g + 0.5 * du * k2g);
        const double k4g = s.gp + du * k3p, k4p = accel(s.g + du * k3g);
        ShootState n;
        n.g = s.g + du / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
        n.gp = s.gp + du / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        return n;
    }
};

constexpr double kSeriesEnd = 1e-4;
constexpr double kShootStep = 2e-5;

// Location of the first maximum of g (zero of g'), found with a cubic
// Hermite root once the sign change is bracketed. Returns > 1 when the
// maximum lies beyond the domain.
double peak_position(const ShootOde& ode, double slope0) {
    ShootState s = ode.series_start(slope0, kSeriesEnd);
    double u = kSeriesEnd;
    while (u < 1.2) {
        const ShootState n = ode.rk4(s, kShootStep);
        if (n.gp <= 0.0) {
            // Hermite interpolation of g' on [u, u+du] using g'' = accel
            const double d0 = ode.accel(s.g), d1 = ode.accel(n.g);
            double th = s.gp / (s.gp - n.gp); // linear seed
            for (int it = 0; it < 20; ++it) {
                const double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
                const double h10 = th * (1 - th) * (1 - th);
                const double h01 = th * th * (3 - 2 * th);
                const double h11 = th * th * (th - 1);
                const double val =
                    h00 * s.gp + h10 * kShootStep * d0 + h01 * n.gp + h11 * kShootStep * d1;
                const double dh00 = 6 * th * th - 6 * th;
                const double dh10 = 3 * th * th - 4 * th + 1;
                const double dh01 = -dh00;
                const double dh11 = 3 * th * th - 2 * th;
                const double der =
                    dh00 * s.gp + dh10 * kShootStep * d0 + dh01 * n.gp + dh11 * kShootStep * d1;
                if (der == 0.0) break;
                const double step = val / der;
                th -= step;
                th = std::clamp(th, 0.0, 1.0);
                if (std::abs(step) < 1e-15) break;
            }
            return u + th * kShootStep;
        }
        s = n;
        u += kShootStep;
    }
    return 2.0;
}

} // namespace

double EigenProfile::value(double uu) const {
    if (uu <= 0.0) return 0.0;
    if (uu >= 1.0) return 0.0;
    const double h = u[1] - u[0];
    const auto n = u.size();
    auto i = static_cast<std::size_t>(uu / h);
    if (i >= n - 1) i = n - 2;
    const double w = (uu - u[i]) / h;
    return f[i] * (1.0 - w) + f[i + 1] * w;
}

double EigenProfile::max_value() const { return *std::max_element(f.begin(), f.end()); }

EigenProfile eigenprofile(double q, int n_samples) {
    if (!(q > 0.0)) throw DomainError("eigenprofile requires q > 0");
    if (q == 1.0) {
        throw DomainError("eigenprofile requires q != 1; the linear case is "
                          "covered by heat_reference");
    }
    if (n_samples < 11 || n_samples % 2 == 0) {
        throw DomainError("eigenprofile needs an odd n_samples >= 11");
    }
    const ShootOde ode{q / std::abs(q - 1.0), 1.0 / q};

    // the peak position is monotone in the initial slope: increasing for
    // q > 1, decreasing for q < 1
    const bool increasing = q > 1.0;
    double lo = 1e-6, hi = 1e6;
    auto misses_low = [&](double s0) {
        const double peak = peak_position(ode, s0);
        return (peak < 0.5) == increasing;
    };
    if (misses_low(lo) == misses_low(hi)) {
        throw Error("eigenprofile: shooting bracket failure for q=" + std::to_string(q));
    }
    for (int it = 0; it < 240 && hi / lo > 1.0 + 1e-14; ++it) {
        const double mid = std::sqrt(lo * hi);
        (misses_low(mid) ? lo : hi) = mid;
    }
    const double slope0 = std::sqrt(lo * hi);

    EigenProfile out;
    out.q = q;
    out.mu = ode.mu;
    out.slope0 = slope0;
    out.u.resize(n_samples);
    out.f.assign(n_samples, 0.0);
    const int half = (n_samples - 1) / 2;
    const double grid_h = 1.0 / (n_samples - 1);
    for (int i = 0; i < n_samples; ++i) out.u[i] = i * grid_h;

    // integrate once more, landing exactly on the grid nodes of [0, 1/2]
    std::vector<double> g(half + 1, 0.0);
    int gi = 1;
    while (gi <= half && out.u[gi] <= kSeriesEnd) {
        g[gi] = ode.series_start(slope0, out.u[gi]).g;
        ++gi;
    }
    ShootState s = ode.series_start(slope0, kSeriesEnd);
    double u = kSeriesEnd;
    for (; gi <= half; ++gi) {
        const double target = out.u[gi];
        const int nsub = std::max(1, static_cast<int>(std::ceil((target - u) / kShootStep)));
        const double du = (target - u) / nsub;
        for (int k = 0; k < nsub; ++k) s = ode.rk4(s, du);
        u = target;
        g[gi] = std::max(s.g, 0.0);
    }
    for (int i = 0; i <= half; ++i) {
        const double fi = std::pow(g[i], 1.0 / q);
        out.f[i] = fi;
        out.f[n_samples - 1 - i] = fi;
    }
    return out;
}

SimilarityProfile similarity_profile(double alpha, int n_samples) {
    if (!(alpha > 0.0)) throw DomainError("similarity_profile requires alpha > 0");
    if (n_samples < 3) throw DomainError("similarity_profile needs n_samples >= 3");
    const double beta = 1.0 / (2.0 + 2.0 * alpha);
    const double a_coef = std::pow(2.0 * alpha / (1.0 + alpha), beta);
    // rise 1 = A K^{1-2b} J with J = int cos(t)^{1-2b} dt over [-pi/2, pi/2];
    // the substitution xi = K sin(t) removes the endpoint singularity
    const double cos_pow = 1.0 - 2.0 * beta;
    // cos^{1-2b} has a fractional-power kink at the endpoints; adaptive
    // refinement recovers full precision there
    auto integrand = [cos_pow](double t) { return std::pow(std::cos(t), cos_pow); };
    const double j_half = adaptive_simpson(integrand, 0.0, 0.5 * kPi, 1e-14, 48);
    const double k_half_width = std::pow(a_coef * 2.0 * j_half, -1.0 / (1.0 - 2.0 * beta));

    SimilarityProfile out;
    out.alpha = alpha;
    out.amplitude_a = a_coef;
    out.half_width_k = k_half_width;
    out.xi.resize(n_samples);
    out.f.resize(n_samples);
    const double scale = a_coef * std::pow(k_half_width, 1.0 - 2.0 * beta);
    double acc = 0.0; // cumulative integral of cos^{1-2b} from 0
    double prev_theta = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double theta = -0.5 * kPi + kPi * double(i) / (n_samples - 1);
        out.xi[i] = k_half_width * std::sin(theta);
        if (i == 0) {
            acc = -j_half;
        } else {
            acc += adaptive_simpson(integrand, prev_theta, theta, 1e-13, 48);
        }
        prev_theta = theta;
        out.f[i] = 0.5 + scale * acc;
    }
    // pin the exact end values (the cumulative quadrature reproduces them
    // to rule precision anyway)
    out.f.front() = 0.0;
    out.f.back() = 1.0;
    return out;
}

RatePrediction rate_predictions(double q) {
    if (!(q > 0.0)) throw DomainError("rate predictions require q > 0");
    RatePrediction r;
    r.q = q;
    r.endpoint_exponent = q / (q + 1.0);
    r.gamma_interface_blowup = 1.0 / (q + 1.0);
    if (q == 1.0) {
        r.regime = Regime::Exponential;
        r.interface_exponent = -kPi * kPi;
        r.gradient_exponent = kPi * kPi;
    } else if (q > 1.0) {
        r.regime = Regime::PowerDecay;
        r.interface_exponent = -1.0 / (q - 1.0);
        r.gradient_exponent = 1.0 / (q - 1.0);
    } else {
        r.regime = Regime::FiniteExtinction;
        r.interface_exponent = 1.0 / (1.0 - q);   // in (T - t)
        r.gradient_exponent = -1.0 / (1.0 - q);   // in (T - t)
    }
    return r;
}

} // namespace steepfront
