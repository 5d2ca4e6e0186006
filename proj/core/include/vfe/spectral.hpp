#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vfe/geometry.hpp"

namespace vfe {

/// Discretization of one run: N = sides * nodes_per_side total nodes with
/// only the first nodes_per_side stored (the rest follow by the 2*pi/M
/// rotation symmetry), `steps` time steps over [0, 2*pi/M^2].
struct GridSpec {
    int sides = 3;
    int nodes_per_side = 512;  // power of two
    std::int64_t steps = 151200;

    /// Empirical stability constant of the explicit scheme, dt <= C/N^2.
    static constexpr double stability_constant = 11.3;

    int total_nodes() const { return sides * nodes_per_side; }
    double t_final() const;  // 2*pi/M^2
    double dt() const { return t_final() / static_cast<double>(steps); }

    /// Smallest step count satisfying the stability bound.
    static std::int64_t min_stable_steps(int sides, int nodes_per_side);

    /// Structural invariants; with enforce_stability also dt <= C/N^2.
    void validate(bool enforce_stability = true) const;
};

/// X and T sampled at the first N/M nodes s_j = 2*pi*j/N.
struct SpectralState {
    int sides = 0;
    double time = 0.0;
    std::vector<Vec3> position;
    std::vector<Vec3> tangent;

    int nodes_per_side() const { return static_cast<int>(tangent.size()); }
    /// Reconstructs a node value on the full circle from the stored block.
    Vec3 tangent_at(int full_index) const;
    Vec3 position_at_node(int full_index) const;
    double max_unit_norm_deviation() const;
};

/// Initial datum: the planar regular polygon with total length 2*pi,
/// positions linearly interpolated between vertices, tangents taking the
/// right-limit value at corner nodes.
SpectralState init_state(int sides, int total_nodes);

class blow_up_error : public std::runtime_error {
public:
    explicit blow_up_error(const std::string& what, std::int64_t step = -1)
        : std::runtime_error(what), step_(step) {}
    std::int64_t step() const { return step_; }

private:
    std::int64_t step_;
};

/// FFT plans and scratch buffers for the symmetry-reduced derivatives of
/// one (sides, nodes_per_side) pair. One instance per thread; construction
/// serializes on the FFTW planner internally.
class SpectralWorkspace {
public:
    SpectralWorkspace(int sides, int nodes_per_side);
    ~SpectralWorkspace();
    SpectralWorkspace(const SpectralWorkspace&) = delete;
    SpectralWorkspace& operator=(const SpectralWorkspace&) = delete;

    int sides() const;
    int nodes_per_side() const;

    /// d^order/ds^order of the horizontal pair Z = F1 + i*F2 of a field
    /// obeying Z(s + 2*pi/M) = e^{2*pi*i/M} Z(s): pre-twist by e^{-2*pi*i*j/N},
    /// N/M-point DFT, weights on the frequencies M*k + 1, inverse, un-twist.
    void derivative_rotating(std::span<const std::complex<double>> in, int order,
                             std::span<std::complex<double>> out);

    /// d^order/ds^order of a real 2*pi/M-periodic field: plain N/M-point DFT
    /// with weights on the frequencies M*k (first-derivative weight of the
    /// Nyquist mode set to zero).
    void derivative_invariant(std::span<const double> in, int order, std::span<double> out);

    /// First and second arc-length derivatives of a tangent-like field.
    void derivatives(std::span<const Vec3> field, std::span<Vec3> d1, std::span<Vec3> d2);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    friend void rk4_step(SpectralState&, double, SpectralWorkspace&);
};

/// Convenience forms constructing a workspace per call.
std::vector<std::complex<double>> derivative_rotating(std::span<const std::complex<double>> field,
                                                      int sides, int order);
std::vector<double> derivative_invariant(std::span<const double> field, int sides, int order);

/// One step of the staged fourth-order scheme for X_t = T x T_s,
/// T_t = T x T_ss, with T renormalized per node after the update
/// (intermediate stages not projected). Throws blow_up_error on non-finite
/// values or a pre-normalization norm deviation above 1.
void rk4_step(SpectralState& state, double dt, SpectralWorkspace& workspace);
SpectralState rk4_step(const SpectralState& state, double dt);

struct TrajectorySample {
    double t = 0.0;
    Vec3 corner;        // X(0, t)
    double height = 0.0;  // h(t), mean of X3 over the circle
};

struct Trajectory {
    GridSpec spec;
    std::vector<TrajectorySample> samples;  // steps + 1 entries
    std::vector<SpectralState> dumps;       // full states at requested times
};

/// Steps the state `spec.steps` times, recording X(0, t) and h(t) every
/// step and dumping full states at the step nearest each requested time.
Trajectory run(const GridSpec& spec, std::span<const double> record_full_at = {});

/// The 1261 comparison times (2*pi/M^2)(m/1260), m = 0..1260.
std::vector<double> paper_comparison_times(int sides);

}  // namespace vfe
