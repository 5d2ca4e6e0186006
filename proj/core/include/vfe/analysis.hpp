#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "vfe/algebraic.hpp"
#include "vfe/spectral.hpp"

namespace vfe {

struct SpeedFit {
    double speed = 0.0;          // c_M = h(t_final)/t_final
    double max_deviation = 0.0;  // max_n |h(t_n) - c_M t_n|
};

/// Mean vertical speed of the center of mass and the largest deviation of
/// h(t) from the linear law c_M * t.
SpeedFit fit_center_speed(const Trajectory& traj);

/// Global maximum over all states and reduced nodes of
/// || X_num(s_j, t) - c_M t e_z - X_alg(s_j, t) ||, with the algebraic
/// polygons built at the given rational times, evaluated between vertices
/// by linear interpolation and vertically gauged by their vertex mean.
double compare_trajectories(std::span<const SpectralState> states,
                            std::span<const RationalTime> times, double center_speed);

/// The nine tangents of the triangle's nine-sided state at one third of the
/// revival period, normalized: the closed-form triple plus its rotations by
/// 2*pi/3 and 4*pi/3 about the z-axis.
std::array<Vec3, 9> exact_triangle_tangents_q3();

/// Componentwise maximum error between the numerical tangent at the central
/// node of each of the nine constant intervals and the closed-form values.
/// Requires a state at t = 2*pi/27 with M = 3.
double compare_tangent_midpoints(const SpectralState& state, int sides);

struct TimeSample {
    double t = 0.0;
    std::complex<double> value;
};

/// z(t) = -||(X1(0,t), X2(0,t))|| + i X3(0,t), one entry per recorded step.
std::vector<TimeSample> corner_curve(const Trajectory& traj);

/// z_M(t) = z(2*pi*t/M^2) - i c_M 2*pi*t/M^2 on the normalized time grid
/// t in [0, 1].
std::vector<TimeSample> normalized_corner_curve(const Trajectory& traj, double center_speed);

/// phi(t) = -sum_{k=1}^{K} e^{-2*pi*i*k^2*t} / (pi*k^2); 1-periodic.
std::complex<double> phi_series(double t, int terms = 8192);

struct AffineFit {
    double lambda = 0.0;
    std::complex<double> mu;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0;
};

/// Least-squares fit of phi ~ lambda * z + mu with real lambda, complex mu.
AffineFit affine_fit(std::span<const std::complex<double>> z,
                     std::span<const std::complex<double>> phi);

struct HolderFit {
    double exponent = 0.0;
    double r_squared = 0.0;
    double window_min = 0.0;
    double window_max = 0.0;
    int samples = 0;
};

enum class FitSide { both, left, right };

/// Least-squares slope of log|z(t) - z(t_corner)| against log|t - t_corner|
/// over window_min <= |t - t_corner| <= window_max, in the units of the
/// samples' time axis. Needs at least 8 in-window samples.
HolderFit holder_exponent(std::span<const TimeSample> samples, double t_corner,
                          double window_min = 1e-4, double window_max = 1e-2,
                          FitSide side = FitSide::both);

}  // namespace vfe
