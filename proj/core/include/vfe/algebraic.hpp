#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vfe/geometry.hpp"

namespace vfe {

/// A rational multiple of the revival period: t = (2*pi/M^2)*(p/q),
/// gcd(p, q) = 1, q >= 1. `sides` is the number of sides M >= 3 of the
/// initial polygon.
struct RationalTime {
    int sides = 3;
    std::int64_t p = 0;
    std::int64_t q = 1;

    /// Validates and reduces p/q to lowest terms (q > 0).
    static RationalTime make(int sides, std::int64_t p, std::int64_t q);

    double value() const;  // (2*pi/M^2)*(p/q)
};

/// The corner data of the curvature delta train on one period [0, 2*pi/M):
/// positions s_m = 2*pi*m/(M*q) and complex coefficients of modulus rho
/// (or exactly zero for half of them when q is even).
struct DeltaTrain {
    RationalTime time;
    std::vector<double> positions;
    std::vector<std::complex<double>> coefficients;
    double rho = 0.0;       // common corner angle, in (0, pi)
    double psi_hat0 = 0.0;  // zero-mode amplitude fixing the train's scale

    bool corner_is_virtual(std::size_t m) const {
        return coefficients[m] == std::complex<double>(0.0, 0.0);
    }
};

/// Angle between adjacent sides of the evolved polygon:
/// arccos(2*cos^{2/q}(pi/M) - 1) for odd q, arccos(2*cos^{4/q}(pi/M) - 1)
/// for even q.
double rho_angle(int sides, std::int64_t q);

/// Zero-mode amplitude (M*sqrt(q)/2pi)*rho for odd q, (M*sqrt(q/2)/2pi)*rho
/// for even q.
double psi_hat0(const RationalTime& time);

DeltaTrain delta_train(const RationalTime& time);

/// Frame rotation across a single corner with curvature coefficient
/// rho*e^{i*theta}: rotation by rho about the axis (0, sin theta, -cos theta).
/// The zero coefficient yields the identity.
Mat3 corner_rotation(std::complex<double> coefficient);

/// Frames on segments k = 0..segments-1, obtained by left-multiplying the
/// stacked (T, e1, e2) rows with the corner rotations M_k, which repeat with
/// period q. `segments` must be a positive multiple of q.
std::vector<Frame> propagate_frame(const DeltaTrain& train, const Frame& initial, int segments);

struct ClosureCheck {
    double trace_residual = 0.0;  // |Tr(M) - 1 - 2 cos(2 pi / M)|
    double root_residual = 0.0;   // max |M^M - I|
    double max_residual() const { return std::max(trace_residual, root_residual); }
};

/// Residuals of the closure condition on the one-period rotation product
/// M = M_{q-1} * ... * M_0.
ClosureCheck closure_check(const RationalTime& time);
double closure_residual(const RationalTime& time);

/// The exact polygonal solution at a rational time: Mq vertices (plus the
/// integrated endpoint X(2*pi)), per-segment unit tangents and a virtual
/// flag marking corners with zero curvature coefficient (q even).
struct SkewPolygon {
    RationalTime time;
    double side_length = 0.0;
    double rho = 0.0;
    double psi_hat0 = 0.0;
    /// Externally supplied vertical offset (e.g. c_M * t from the analysis
    /// layer); the constructed vertices keep the gauge of the build and the
    /// offset is applied by position()/position_at().
    double vertical_offset = 0.0;

    std::vector<Vec3> vertices;  // size segments()+1; back() is X(2*pi) as integrated
    std::vector<Vec3> tangents;  // size segments()
    std::vector<std::uint8_t> virtual_corner;

    int segments() const { return static_cast<int>(tangents.size()); }
    double closure_gap() const { return (vertices.back() - vertices.front()).norm(); }
    int distinct_sides() const;
    double mean_vertex_height() const;  // without vertical_offset

    Vec3 vertex(int k) const { return vertices[k] + Vec3{0, 0, vertical_offset}; }
    /// Linear interpolation along the segments at arc length s (wrapped to [0, 2*pi)).
    Vec3 position_at(double s) const;
};

/// Integrates the frame propagation into vertices (side 2*pi/(Mq), zero
/// start, identity initial frame) and applies align_polygon. Throws
/// std::runtime_error if the closure residual exceeds 1e-8.
SkewPolygon build_polygon(const RationalTime& time);

/// Rigid alignment: brings the plane of the M points X(2*pi*k/M) orthogonal
/// to the z-axis with X(2*pi/M) - X(0) a positive multiple of (1, 0, 0),
/// then translates horizontally so the mean of those M points lies on the
/// z-axis. The vertical position is left as produced.
SkewPolygon align_polygon(const SkewPolygon& raw, int sides);

}  // namespace vfe
