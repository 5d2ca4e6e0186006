#include "vfe/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vfe {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

SpeedFit fit_center_speed(const Trajectory& traj) {
    if (traj.samples.size() < 2) throw std::invalid_argument("fit_center_speed: empty trajectory");
    const auto& last = traj.samples.back();
    const double tf = traj.spec.t_final();
    if (std::abs(last.t - tf) > 1e-9 * tf)
        throw std::invalid_argument("fit_center_speed: trajectory does not reach t = 2*pi/M^2");
    SpeedFit fit;
    fit.speed = last.height / last.t;
    for (const auto& s : traj.samples)
        fit.max_deviation = std::max(fit.max_deviation, std::abs(s.height - fit.speed * s.t));
    return fit;
}

double compare_trajectories(std::span<const SpectralState> states,
                            std::span<const RationalTime> times, double center_speed) {
    if (states.size() != times.size() || states.empty())
        throw std::invalid_argument("compare_trajectories: states and times must pair up");

    double worst = 0.0;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& state = states[i];
        const double t = times[i].value();
        if (state.sides != times[i].sides)
            throw std::invalid_argument("compare_trajectories: side count mismatch");
        const double tf = two_pi / (static_cast<double>(state.sides) * state.sides);
        if (std::abs(state.time - t) > 1e-3 * tf)
            throw std::invalid_argument("compare_trajectories: state/time misalignment");

        SkewPolygon poly = build_polygon(times[i]);
        poly.vertical_offset = center_speed * t - poly.mean_vertex_height();

        const int nm = state.nodes_per_side();
        const int n = state.sides * nm;
        for (int j = 0; j < nm; ++j) {
            const double s = two_pi * j / n;
            const Vec3 diff = state.position[j] - poly.position_at(s);
            worst = std::max(worst, diff.norm());
        }
    }
    return worst;
}

std::array<Vec3, 9> exact_triangle_tangents_q3() {
    const double c = std::cbrt(2.0);           // 2^(1/3)
    const double r = std::sqrt(c * c - 1.0);   // sqrt(4^(1/3) - 1)
    const std::array<Vec3, 3> base = {Vec3{c - 1.0, -r, 1.0 - c * c}.normalized(),
                                      Vec3{1.0, 0.0, 0.0},
                                      Vec3{c - 1.0, r, c * c - 1.0}.normalized()};
    std::array<Vec3, 9> all;
    for (int k = 0; k < 3; ++k) {
        const Mat3 rot = Mat3::rotation_z(two_pi * k / 3.0);
        for (int i = 0; i < 3; ++i) all[3 * k + i] = rot * base[i];
    }
    return all;
}

double compare_tangent_midpoints(const SpectralState& state, int sides) {
    if (sides != 3 || state.sides != 3)
        throw std::invalid_argument("compare_tangent_midpoints: defined for M = 3");
    const double t13 = two_pi / 27.0;
    if (std::abs(state.time - t13) > 1e-6 * t13)
        throw std::invalid_argument("compare_tangent_midpoints: state is not at t = 2*pi/27");

    const int n = state.sides * state.nodes_per_side();
    const auto exact = exact_triangle_tangents_q3();
    double err = 0.0;
    for (int i = 0; i < 9; ++i) {
        const double mid = two_pi * (i + 0.5) / 9.0;
        const auto j = static_cast<int>(std::llround(mid / (two_pi / n))) % n;
        const Vec3 diff = state.tangent_at(j) - exact[i];
        err = std::max(err, diff.max_abs());
    }
    return err;
}

std::vector<TimeSample> corner_curve(const Trajectory& traj) {
    std::vector<TimeSample> out;
    out.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        const double radial = std::hypot(s.corner.x, s.corner.y);
        out.push_back({s.t, {-radial, s.corner.z}});
    }
    return out;
}

std::vector<TimeSample> normalized_corner_curve(const Trajectory& traj, double center_speed) {
    const double tf = traj.spec.t_final();
    std::vector<TimeSample> out;
    out.reserve(traj.samples.size());
    for (const auto& s : traj.samples) {
        const double radial = std::hypot(s.corner.x, s.corner.y);
        const std::complex<double> z{-radial, s.corner.z - center_speed * s.t};
        out.push_back({s.t / tf, z});
    }
    return out;
}

std::complex<double> phi_series(double t, int terms) {
    if (terms < 1) throw std::invalid_argument("phi_series: need at least one term");
    // e^{-2*pi*i*k^2*t} advanced incrementally: k^2 grows by 2k+1 per step
    const std::complex<double> step = std::polar(1.0, -two_pi * 2.0 * t);
    std::complex<double> odd = std::polar(1.0, -two_pi * t);  // e^{-2*pi*i*(2k+1)*t} at k=0
    std::complex<double> rotor = 1.0;                         // e^{-2*pi*i*k^2*t} at k=0
    std::complex<double> acc = 0.0;
    for (int k = 1; k <= terms; ++k) {
        rotor *= odd;
        odd *= step;
        acc += rotor / static_cast<double>(static_cast<std::int64_t>(k) * k);
    }
    return -acc / std::numbers::pi;
}

AffineFit affine_fit(std::span<const std::complex<double>> z,
                     std::span<const std::complex<double>> phi) {
    if (z.size() != phi.size() || z.empty())
        throw std::invalid_argument("affine_fit: sample sets must pair up");
    const auto n = static_cast<double>(z.size());

    std::complex<double> zbar = 0.0, pbar = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        zbar += z[i];
        pbar += phi[i];
    }
    zbar /= n;
    pbar /= n;

    std::complex<double> cov = 0.0;
    double var = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        cov += (z[i] - zbar) * std::conj(phi[i] - pbar);
        var += std::norm(z[i] - zbar);
    }
    if (var == 0.0) throw std::invalid_argument("affine_fit: degenerate (constant) z samples");

    AffineFit fit;
    fit.lambda = (cov / var).real();
    fit.mu = pbar - fit.lambda * zbar;
    for (std::size_t i = 0; i < z.size(); ++i) {
        const std::complex<double> resid = phi[i] - fit.lambda * z[i] - fit.mu;
        fit.max_abs_err = std::max(fit.max_abs_err, std::abs(resid));
        if (std::abs(phi[i]) > 0.0)
            fit.max_rel_err = std::max(fit.max_rel_err, std::abs(resid) / std::abs(phi[i]));
    }
    return fit;
}

HolderFit holder_exponent(std::span<const TimeSample> samples, double t_corner, double window_min,
                          double window_max, FitSide side) {
    if (samples.size() < 2) throw std::invalid_argument("holder_exponent: too few samples");

    // the corner value is taken from the sample nearest t_corner
    std::size_t corner_idx = 0;
    double best = std::abs(samples[0].t - t_corner);
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double d = std::abs(samples[i].t - t_corner);
        if (d < best) {
            best = d;
            corner_idx = i;
        }
    }
    const std::complex<double> z0 = samples[corner_idx].value;

    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    int count = 0;
    for (const auto& s : samples) {
        const double dt = s.t - t_corner;
        const double ad = std::abs(dt);
        if (ad < window_min || ad > window_max) continue;
        if (side == FitSide::left && dt > 0) continue;
        if (side == FitSide::right && dt < 0) continue;
        const double dz = std::abs(s.value - z0);
        if (dz == 0.0) continue;
        const double x = std::log(ad), y = std::log(dz);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        ++count;
    }
    if (count < 8) throw std::invalid_argument("holder_exponent: fewer than 8 in-window samples");

    const double n = count;
    const double cov = sxy - sx * sy / n;
    const double varx = sxx - sx * sx / n;
    const double vary = syy - sy * sy / n;

    HolderFit fit;
    fit.exponent = cov / varx;
    fit.r_squared = (vary > 0.0) ? (cov * cov) / (varx * vary) : 1.0;
    fit.window_min = window_min;
    fit.window_max = window_max;
    fit.samples = count;
    return fit;
}

}  // namespace vfe
