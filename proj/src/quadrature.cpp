#include "steepfront/quadrature.hpp"

#include <cmath>

namespace steepfront {

namespace {

// Abscissas/weights for the 32-point Gauss-Legendre rule on [-1, 1]
// (positive half; the rule is symmetric).
constexpr double kGlNodes[16] = {
    0.0483076656877383162, 0.1444719615827964934, 0.2392873622521370745,
    0.3318686022821276497, 0.4213512761306353454, 0.5068999089322293900,
    0.5877157572407623290, 0.6630442669302152010, 0.7321821187402896804,
    0.7944837959679424070, 0.8493676137325699701, 0.8963211557660521240,
    0.9349060759377396892, 0.9647622555875064308, 0.9856115115452683354,
    0.9972638618494815635};
constexpr double kGlWeights[16] = {
    0.0965400885147278006, 0.0956387200792748594, 0.0938443990808045654,
    0.0911738786957638847, 0.0876520930044038111, 0.0833119242269467552,
    0.0781938957870703065, 0.0723457941088485062, 0.0658222227763618468,
    0.0586840934785355471, 0.0509980592623761762, 0.0428358980222266807,
    0.0342738629130214331, 0.0253920653092620595, 0.0162743947309056706,
    0.0070186100094700966};

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double fa,
                            double b, double fb, double m, double fm, double whole,
                            double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (!std::isfinite(delta)) return left + right;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double gauss_legendre(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 16; ++i) {
        sum += kGlWeights[i] * (f(c + r * kGlNodes[i]) + f(c - r * kGlNodes[i]));
    }
    return r * sum;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive_simpson_rec(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

namespace {

// Shared dyadic-block accumulator. Divergence is declared when the partial
// sum blows past the bound, or when block contributions of one sign stop
// decaying (a provably divergent tail, e.g. the logarithmic 1/s).
template <typename NextBlock>
ImproperIntegral sum_dyadic(NextBlock next, double abs_tol, double divergence_bound) {
    ImproperIntegral result;
    double total = 0.0;
    double prev_block = 0.0;
    int quiet_blocks = 0;
    int stubborn_blocks = 0;
    for (int k = 0; k < 900; ++k) {
        const double block = next();
        total += block;
        if (!std::isfinite(total) || std::abs(total) > divergence_bound) {
            result.status = IntegralStatus::Divergent;
            result.value = total;
            return result;
        }
        quiet_blocks = (std::abs(block) <= abs_tol * std::max(1.0, std::abs(total)))
                           ? quiet_blocks + 1
                           : 0;
        if (quiet_blocks >= 4) {
            result.status = IntegralStatus::Convergent;
            result.value = total;
            return result;
        }
        const bool same_sign = block * prev_block > 0.0;
        const bool not_decaying =
            k > 0 && same_sign && std::abs(block) >= (1.0 - 1e-6) * std::abs(prev_block);
        stubborn_blocks = not_decaying ? stubborn_blocks + 1 : 0;
        if (stubborn_blocks >= 100) {
            result.status = IntegralStatus::Divergent;
            result.value = total;
            return result;
        }
        prev_block = block;
    }
    result.value = total;
    return result; // neither settled nor blown up: indeterminate
}

} // namespace

ImproperIntegral integrate_to_zero(const std::function<double(double)>& f, double upper,
                                   double abs_tol, double divergence_bound) {
    double hi = upper;
    return sum_dyadic(
        [&]() {
            const double lo = 0.5 * hi;
            const double block = adaptive_simpson(f, lo, hi, 0.25 * abs_tol);
            hi = lo;
            return block;
        },
        abs_tol, divergence_bound);
}

ImproperIntegral integrate_to_infinity(const std::function<double(double)>& f, double lower,
                                       double abs_tol, double divergence_bound) {
    double lo = lower;
    return sum_dyadic(
        [&]() {
            const double hi = 2.0 * lo;
            const double block = adaptive_simpson(f, lo, hi, 0.25 * abs_tol);
            lo = hi;
            return block;
        },
        abs_tol, divergence_bound);
}

} // namespace steepfront
