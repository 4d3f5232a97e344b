#include "steepfront/transform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "steepfront/error.hpp"

namespace steepfront {

namespace {

double interp_sorted(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    const auto i = static_cast<std::size_t>(it - xs.begin()) - 1;
    const double w = (x - xs[i]) / (xs[i + 1] - xs[i]);
    return ys[i] * (1.0 - w) + ys[i + 1] * w;
}

} // namespace

MonotoneProfile::MonotoneProfile(std::vector<double> x, std::vector<double> u)
    : x_(std::move(x)), u_(std::move(u)) {
    if (x_.size() != u_.size() || x_.size() < 2) {
        throw DomainError("profile needs matching x/u samples, at least two");
    }
    if (std::abs(u_.front()) > 1e-12 || std::abs(u_.back() - 1.0) > 1e-12) {
        throw DomainError("profile must rise from u=0 to u=1");
    }
    u_.front() = 0.0;
    u_.back() = 1.0;
    min_slope_ = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
        const double dx = x_[i + 1] - x_[i];
        const double du = u_[i + 1] - u_[i];
        if (!(dx > 0.0) || !(du > 0.0)) {
            throw DomainError("profile must be strictly increasing in x and u (flat or "
                              "reversed segment at sample " + std::to_string(i) + ")");
        }
        min_slope_ = std::min(min_slope_, du / dx);
    }
}

double MonotoneProfile::value(double xx) const { return interp_sorted(x_, u_, xx); }

double MonotoneProfile::inverse(double uu) const { return interp_sorted(u_, x_, uu); }

ConjugateState conj_initial_data(const MonotoneProfile& profile, const ConjGrid& grid) {
    ConjugateState s;
    s.t = 0.0;
    s.h = grid.spacing();
    s.x.resize(grid.n_nodes());
    for (int i = 0; i < grid.n_nodes(); ++i) s.x[i] = profile.inverse(grid.node(i));
    return s;
}

SolutionFrame reconstruct(const ConjugateState& state) {
    const int nf = state.n_faces();
    for (int i = 0; i < nf; ++i) {
        if (state.face_slope(i) < 0.0) {
            throw IntegrityError("cannot reconstruct from a non-monotone state (face " +
                                 std::to_string(i) + ")");
        }
    }
    SolutionFrame f;
    f.t = state.t;
    f.x = state.x;
    f.u.resize(state.x.size());
    for (std::size_t i = 0; i < f.u.size(); ++i) {
        f.u[i] = static_cast<double>(i) * state.h;
    }
    f.u.back() = 1.0;
    f.l = state.x.front();
    f.r = state.x.back();
    f.center_c = interp_sorted(f.u, f.x, 0.5);
    return f;
}

std::vector<GradientSample> gradient_profile(const ConjugateState& state) {
    const int nf = state.n_faces();
    std::vector<GradientSample> out;
    out.reserve(nf);
    for (int i = 0; i < nf; ++i) {
        const double w = state.face_slope(i);
        if (w == 0.0) {
            throw IntegrityError("zero face slope at face " + std::to_string(i) +
                                 " (u=" + std::to_string((i + 0.5) * state.h) +
                                 "): gradient is singular there");
        }
        GradientSample g;
        g.x = 0.5 * (state.x[i] + state.x[i + 1]);
        g.u = (i + 0.5) * state.h;
        g.v = 1.0 / w;
        out.push_back(g);
    }
    return out;
}

double roundtrip_residual(const MonotoneProfile& profile, const ConjGrid& grid) {
    const ConjugateState state = conj_initial_data(profile, grid);
    const SolutionFrame frame = reconstruct(state);
    // gap measured along x at each sample's own level: the inverse map
    // x(u) stays smooth up to the interfaces even where the profile slope
    // degenerates, so this residual is second order uniformly
    double worst = 0.0;
    for (std::size_t j = 0; j < profile.x().size(); ++j) {
        const double x_rt = interp_sorted(frame.u, frame.x, profile.u()[j]);
        worst = std::max(worst, std::abs(x_rt - profile.x()[j]));
    }
    return worst;
}

} // namespace steepfront
