#include "vfe/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

namespace vfe {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

double GridSpec::t_final() const {
    return two_pi / (static_cast<double>(sides) * sides);
}

std::int64_t GridSpec::min_stable_steps(int sides, int nodes_per_side) {
    const double n = static_cast<double>(sides) * nodes_per_side;
    const double tf = two_pi / (static_cast<double>(sides) * sides);
    return static_cast<std::int64_t>(std::ceil(tf / (stability_constant / (n * n))));
}

void GridSpec::validate(bool enforce_stability) const {
    if (sides < 3) throw std::invalid_argument("GridSpec: need at least 3 sides");
    if (!is_power_of_two(nodes_per_side) || nodes_per_side < 2)
        throw std::invalid_argument("GridSpec: nodes_per_side must be a power of two >= 2");
    if (steps < 1) throw std::invalid_argument("GridSpec: steps must be >= 1");
    if (enforce_stability) {
        const double n = static_cast<double>(total_nodes());
        if (dt() > stability_constant / (n * n) * (1.0 + 1e-12))
            throw std::invalid_argument("GridSpec: dt exceeds the stability bound C/N^2; need at least " +
                                        std::to_string(min_stable_steps(sides, nodes_per_side)) + " steps");
    }
}

Vec3 SpectralState::tangent_at(int full_index) const {
    const int nm = nodes_per_side();
    const int n = sides * nm;
    int j = full_index % n;
    if (j < 0) j += n;
    const int block = j / nm;
    const Vec3 v = tangent[j % nm];
    const Mat3 r = Mat3::rotation_z(two_pi * block / sides);
    return r * v;
}

Vec3 SpectralState::position_at_node(int full_index) const {
    const int nm = nodes_per_side();
    const int n = sides * nm;
    int j = full_index % n;
    if (j < 0) j += n;
    const int block = j / nm;
    const Vec3 v = position[j % nm];
    const Mat3 r = Mat3::rotation_z(two_pi * block / sides);
    return r * v;
}

double SpectralState::max_unit_norm_deviation() const {
    double dev = 0.0;
    for (const auto& t : tangent) dev = std::max(dev, std::abs(t.norm() - 1.0));
    return dev;
}

SpectralState init_state(int sides, int total_nodes) {
    if (sides < 3) throw std::invalid_argument("init_state: need at least 3 sides");
    if (total_nodes % sides != 0 || !is_power_of_two(total_nodes / sides))
        throw std::invalid_argument("init_state: total nodes must be sides * 2^r");
    const int nm = total_nodes / sides;

    // first two vertices of the length-2*pi regular polygon in the plane z = 0
    const double radius = std::numbers::pi / (sides * std::sin(std::numbers::pi / sides));
    const std::complex<double> v0 =
        std::complex<double>(0, -1) * radius * std::polar(1.0, -std::numbers::pi / sides);
    const std::complex<double> v1 =
        std::complex<double>(0, -1) * radius * std::polar(1.0, std::numbers::pi / sides);

    SpectralState state;
    state.sides = sides;
    state.time = 0.0;
    state.position.reserve(nm);
    state.tangent.assign(nm, Vec3{1, 0, 0});
    for (int j = 0; j < nm; ++j) {
        const double frac = static_cast<double>(j) / nm;  // along the first side
        const std::complex<double> p = v0 + (v1 - v0) * frac;
        state.position.push_back({p.real(), p.imag(), 0.0});
    }
    return state;
}

struct SpectralWorkspace::Impl {
    int sides;
    int nm;
    fftw_complex* in;
    fftw_complex* spec;
    fftw_complex* weighted;
    fftw_complex* out;
    fftw_plan fwd;
    fftw_plan bwd;
    std::vector<std::complex<double>> twist;    // e^{-2*pi*i*j/N}
    std::vector<std::complex<double>> untwist;  // e^{+2*pi*i*j/N}
    std::vector<double> freq_rot;               // M*k + 1, signed k
    std::vector<double> freq_inv;               // M*k, signed k
    // stage storage for rk4
    std::vector<Vec3> ts, tss, vx[4], vt[4], tstage;

    Impl(int sides_, int nm_) : sides(sides_), nm(nm_) {
        in = fftw_alloc_complex(nm);
        spec = fftw_alloc_complex(nm);
        weighted = fftw_alloc_complex(nm);
        out = fftw_alloc_complex(nm);
        {
            std::lock_guard<std::mutex> lock(planner_mutex());
            fwd = fftw_plan_dft_1d(nm, in, spec, FFTW_FORWARD, FFTW_ESTIMATE);
            bwd = fftw_plan_dft_1d(nm, weighted, out, FFTW_BACKWARD, FFTW_ESTIMATE);
        }
        const int n = sides * nm;
        twist.resize(nm);
        untwist.resize(nm);
        for (int j = 0; j < nm; ++j) {
            twist[j] = std::polar(1.0, -two_pi * j / n);
            untwist[j] = std::polar(1.0, two_pi * j / n);
        }
        freq_rot.resize(nm);
        freq_inv.resize(nm);
        for (int idx = 0; idx < nm; ++idx) {
            const int k = idx < nm / 2 ? idx : idx - nm;
            freq_rot[idx] = static_cast<double>(sides) * k + 1.0;
            freq_inv[idx] = static_cast<double>(sides) * k;
        }
        ts.resize(nm);
        tss.resize(nm);
        for (auto& v : vx) v.resize(nm);
        for (auto& v : vt) v.resize(nm);
        tstage.resize(nm);
    }

    ~Impl() {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(bwd);
        fftw_free(in);
        fftw_free(spec);
        fftw_free(weighted);
        fftw_free(out);
    }

    // applies derivative weights to `spec` (already transformed) and inverse-transforms
    void apply_weights_and_invert(const std::vector<double>& freq, int order, bool zero_nyquist) {
        const double scale = 1.0 / nm;  // inverse-transform normalization
        if (order == 1) {
            for (int idx = 0; idx < nm; ++idx) {
                const double w = freq[idx] * scale;
                // multiply by i*w: (re, im) -> (-im*w, re*w)
                weighted[idx][0] = -spec[idx][1] * w;
                weighted[idx][1] = spec[idx][0] * w;
            }
            if (zero_nyquist) {
                weighted[nm / 2][0] = 0.0;
                weighted[nm / 2][1] = 0.0;
            }
        } else {
            for (int idx = 0; idx < nm; ++idx) {
                const double w = -freq[idx] * freq[idx] * scale;
                weighted[idx][0] = spec[idx][0] * w;
                weighted[idx][1] = spec[idx][1] * w;
            }
        }
        fftw_execute(bwd);
    }

    // forward transform of the pre-twisted horizontal pair of `field`
    void load_rotating(std::span<const Vec3> field) {
        for (int j = 0; j < nm; ++j) {
            const std::complex<double> z =
                std::complex<double>(field[j].x, field[j].y) * twist[j];
            in[j][0] = z.real();
            in[j][1] = z.imag();
        }
        fftw_execute(fwd);
    }

    void load_invariant(std::span<const Vec3> field) {
        for (int j = 0; j < nm; ++j) {
            in[j][0] = field[j].z;
            in[j][1] = 0.0;
        }
        fftw_execute(fwd);
    }

    // first and second derivatives of a symmetric vector field
    void derivatives(std::span<const Vec3> field, std::span<Vec3> d1, std::span<Vec3> d2) {
        load_rotating(field);
        apply_weights_and_invert(freq_rot, 1, false);
        for (int j = 0; j < nm; ++j) {
            const std::complex<double> z = std::complex<double>(out[j][0], out[j][1]) * untwist[j];
            d1[j].x = z.real();
            d1[j].y = z.imag();
        }
        apply_weights_and_invert(freq_rot, 2, false);
        for (int j = 0; j < nm; ++j) {
            const std::complex<double> z = std::complex<double>(out[j][0], out[j][1]) * untwist[j];
            d2[j].x = z.real();
            d2[j].y = z.imag();
        }
        load_invariant(field);
        apply_weights_and_invert(freq_inv, 1, true);
        for (int j = 0; j < nm; ++j) d1[j].z = out[j][0];
        apply_weights_and_invert(freq_inv, 2, false);
        for (int j = 0; j < nm; ++j) d2[j].z = out[j][0];
    }

    // velocities of the coupled system: vX = T x T_s, vT = T x T_ss
    void velocity(std::span<const Vec3> t, std::span<Vec3> vx_out, std::span<Vec3> vt_out) {
        derivatives(t, ts, tss);
        for (int j = 0; j < nm; ++j) {
            vx_out[j] = t[j].cross(ts[j]);
            vt_out[j] = t[j].cross(tss[j]);
        }
    }
};

SpectralWorkspace::SpectralWorkspace(int sides, int nodes_per_side)
    : impl_(std::make_unique<Impl>(sides, nodes_per_side)) {
    if (sides < 3) throw std::invalid_argument("SpectralWorkspace: need at least 3 sides");
    if (!is_power_of_two(nodes_per_side))
        throw std::invalid_argument("SpectralWorkspace: nodes_per_side must be a power of two");
}

SpectralWorkspace::~SpectralWorkspace() = default;

int SpectralWorkspace::sides() const { return impl_->sides; }
int SpectralWorkspace::nodes_per_side() const { return impl_->nm; }

void SpectralWorkspace::derivative_rotating(std::span<const std::complex<double>> in, int order,
                                            std::span<std::complex<double>> out) {
    auto& w = *impl_;
    if (static_cast<int>(in.size()) != w.nm || static_cast<int>(out.size()) != w.nm)
        throw std::invalid_argument("derivative_rotating: field length must be N/M");
    if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
    for (int j = 0; j < w.nm; ++j) {
        const std::complex<double> z = in[j] * w.twist[j];
        w.in[j][0] = z.real();
        w.in[j][1] = z.imag();
    }
    fftw_execute(w.fwd);
    w.apply_weights_and_invert(w.freq_rot, order, false);
    for (int j = 0; j < w.nm; ++j)
        out[j] = std::complex<double>(w.out[j][0], w.out[j][1]) * w.untwist[j];
}

void SpectralWorkspace::derivative_invariant(std::span<const double> in, int order,
                                             std::span<double> out) {
    auto& w = *impl_;
    if (static_cast<int>(in.size()) != w.nm || static_cast<int>(out.size()) != w.nm)
        throw std::invalid_argument("derivative_invariant: field length must be N/M");
    if (order != 1 && order != 2) throw std::invalid_argument("derivative order must be 1 or 2");
    for (int j = 0; j < w.nm; ++j) {
        w.in[j][0] = in[j];
        w.in[j][1] = 0.0;
    }
    fftw_execute(w.fwd);
    w.apply_weights_and_invert(w.freq_inv, order, order == 1);
    for (int j = 0; j < w.nm; ++j) out[j] = w.out[j][0];
}

void SpectralWorkspace::derivatives(std::span<const Vec3> field, std::span<Vec3> d1,
                                    std::span<Vec3> d2) {
    impl_->derivatives(field, d1, d2);
}

std::vector<std::complex<double>> derivative_rotating(std::span<const std::complex<double>> field,
                                                      int sides, int order) {
    SpectralWorkspace ws(sides, static_cast<int>(field.size()));
    std::vector<std::complex<double>> out(field.size());
    ws.derivative_rotating(field, order, out);
    return out;
}

std::vector<double> derivative_invariant(std::span<const double> field, int sides, int order) {
    SpectralWorkspace ws(sides, static_cast<int>(field.size()));
    std::vector<double> out(field.size());
    ws.derivative_invariant(field, order, out);
    return out;
}

void rk4_step(SpectralState& state, double dt, SpectralWorkspace& workspace) {
    auto& w = *workspace.impl_;
    const int nm = w.nm;
    if (state.nodes_per_side() != nm || state.sides != w.sides)
        throw std::invalid_argument("rk4_step: state does not match the workspace grid");

    auto& t = state.tangent;
    auto& x = state.position;

    w.velocity(t, w.vx[0], w.vt[0]);
    for (int j = 0; j < nm; ++j) w.tstage[j] = t[j] + (dt / 2) * w.vt[0][j];
    w.velocity(w.tstage, w.vx[1], w.vt[1]);
    for (int j = 0; j < nm; ++j) w.tstage[j] = t[j] + (dt / 2) * w.vt[1][j];
    w.velocity(w.tstage, w.vx[2], w.vt[2]);
    for (int j = 0; j < nm; ++j) w.tstage[j] = t[j] + dt * w.vt[2][j];
    w.velocity(w.tstage, w.vx[3], w.vt[3]);

    double max_norm_dev = 0.0;
    bool finite = true;
    for (int j = 0; j < nm; ++j) {
        x[j] += (dt / 6) * (w.vx[0][j] + 2.0 * w.vx[1][j] + 2.0 * w.vx[2][j] + w.vx[3][j]);
        const Vec3 tt = t[j] + (dt / 6) * (w.vt[0][j] + 2.0 * w.vt[1][j] + 2.0 * w.vt[2][j] + w.vt[3][j]);
        const double norm = tt.norm();
        finite = finite && std::isfinite(norm) && std::isfinite(x[j].x + x[j].y + x[j].z);
        max_norm_dev = std::max(max_norm_dev, std::abs(norm - 1.0));
        t[j] = tt * (1.0 / norm);
    }
    state.time += dt;
    if (!finite || max_norm_dev > 1.0)
        throw blow_up_error("rk4_step: blow-up detected (pre-normalization tangent norm deviation " +
                            std::to_string(max_norm_dev) + ")");
}

SpectralState rk4_step(const SpectralState& state, double dt) {
    SpectralWorkspace ws(state.sides, state.nodes_per_side());
    SpectralState next = state;
    rk4_step(next, dt, ws);
    return next;
}

Trajectory run(const GridSpec& spec, std::span<const double> record_full_at) {
    spec.validate();
    const int nm = spec.nodes_per_side;
    const double dt = spec.dt();

    Trajectory traj;
    traj.spec = spec;
    traj.samples.reserve(spec.steps + 1);

    std::vector<std::int64_t> dump_steps;
    dump_steps.reserve(record_full_at.size());
    for (const double t : record_full_at) {
        auto idx = static_cast<std::int64_t>(std::llround(t / dt));
        dump_steps.push_back(std::clamp<std::int64_t>(idx, 0, spec.steps));
    }
    std::sort(dump_steps.begin(), dump_steps.end());
    dump_steps.erase(std::unique(dump_steps.begin(), dump_steps.end()), dump_steps.end());

    SpectralState state = init_state(spec.sides, spec.total_nodes());
    SpectralWorkspace ws(spec.sides, nm);

    auto height = [&](const SpectralState& s) {
        double acc = 0.0;
        for (const auto& p : s.position) acc += p.z;
        return acc / nm;
    };
    auto record = [&](const SpectralState& s) {
        traj.samples.push_back({s.time, s.position[0], height(s)});
    };

    std::size_t next_dump = 0;
    record(state);
    if (next_dump < dump_steps.size() && dump_steps[next_dump] == 0) {
        traj.dumps.push_back(state);
        ++next_dump;
    }
    for (std::int64_t n = 1; n <= spec.steps; ++n) {
        try {
            rk4_step(state, dt, ws);
        } catch (const blow_up_error& e) {
            throw blow_up_error(std::string(e.what()) + " at step " + std::to_string(n), n);
        }
        record(state);
        if (next_dump < dump_steps.size() && dump_steps[next_dump] == n) {
            traj.dumps.push_back(state);
            ++next_dump;
        }
    }
    return traj;
}

std::vector<double> paper_comparison_times(int sides) {
    const double tf = two_pi / (static_cast<double>(sides) * sides);
    std::vector<double> times;
    times.reserve(1261);
    for (int m = 0; m <= 1260; ++m) times.push_back(tf * m / 1260.0);
    return times;
}

}  // namespace vfe
