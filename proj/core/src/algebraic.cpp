#include "vfe/algebraic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "vfe/gauss_sums.hpp"

namespace vfe {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

RationalTime RationalTime::make(int sides, std::int64_t p, std::int64_t q) {
    if (sides < 3) throw std::invalid_argument("RationalTime: need at least 3 sides");
    if (q == 0) throw std::invalid_argument("RationalTime: q must be nonzero");
    if (q < 0) {
        q = -q;
        p = -p;
    }
    const std::int64_t g = gauss::gcd(p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    return RationalTime{sides, p, q};
}

double RationalTime::value() const {
    return (two_pi / (static_cast<double>(sides) * sides)) * (static_cast<double>(p) / static_cast<double>(q));
}

double rho_angle(int sides, std::int64_t q) {
    if (sides < 3) throw std::invalid_argument("rho_angle: need at least 3 sides");
    if (q < 1) throw std::invalid_argument("rho_angle: q must be >= 1");
    const double exponent = (q % 2 == 1) ? 2.0 / static_cast<double>(q) : 4.0 / static_cast<double>(q);
    const double c = std::pow(std::cos(std::numbers::pi / sides), exponent);
    return safe_acos(2.0 * c - 1.0);
}

double psi_hat0(const RationalTime& time) {
    const double rho = rho_angle(time.sides, time.q);
    const double n = (time.q % 2 == 1) ? std::sqrt(static_cast<double>(time.q))
                                       : std::sqrt(static_cast<double>(time.q) / 2.0);
    return time.sides * n / two_pi * rho;
}

DeltaTrain delta_train(const RationalTime& time) {
    DeltaTrain train;
    train.time = time;
    train.rho = rho_angle(time.sides, time.q);
    train.psi_hat0 = psi_hat0(time);
    const double prefactor = two_pi / (static_cast<double>(time.sides) * time.q) * train.psi_hat0;
    train.positions.reserve(time.q);
    train.coefficients.reserve(time.q);
    for (std::int64_t m = 0; m < time.q; ++m) {
        train.positions.push_back(two_pi * m / (static_cast<double>(time.sides) * time.q));
        train.coefficients.push_back(prefactor * gauss::sum_closed({-time.p, m, time.q}));
    }
    return train;
}

Mat3 corner_rotation(std::complex<double> coefficient) {
    const double rho = std::abs(coefficient);
    if (rho == 0.0) return Mat3::identity();
    const double theta = std::arg(coefficient);
    const double cr = std::cos(rho), sr = std::sin(rho);
    const double ct = std::cos(theta), st = std::sin(theta);
    Mat3 m;
    m.a = {cr,       sr * ct,                  sr * st,
           -sr * ct, cr * ct * ct + st * st,   (cr - 1.0) * ct * st,
           -sr * st, (cr - 1.0) * ct * st,     cr * st * st + ct * ct};
    return m;
}

std::vector<Frame> propagate_frame(const DeltaTrain& train, const Frame& initial, int segments) {
    const auto q = static_cast<int>(train.coefficients.size());
    if (segments <= 0 || segments % q != 0)
        throw std::invalid_argument("propagate_frame: segments must be a positive multiple of q");
    if (initial.orthonormality_error() > 1e-10)
        throw std::invalid_argument("propagate_frame: initial frame is not orthonormal");

    std::vector<Mat3> corner(q);
    for (int m = 0; m < q; ++m) corner[m] = corner_rotation(train.coefficients[m]);

    std::vector<Frame> frames;
    frames.reserve(segments);
    Frame f = initial;
    for (int k = 0; k < segments; ++k) {
        f = f.transformed(corner[k % q]);
        frames.push_back(f);
    }
    return frames;
}

ClosureCheck closure_check(const RationalTime& time) {
    const DeltaTrain train = delta_train(time);
    Mat3 product = Mat3::identity();
    for (std::int64_t m = 0; m < time.q; ++m)
        product = corner_rotation(train.coefficients[m]) * product;

    ClosureCheck check;
    check.trace_residual = std::abs(product.trace() - 1.0 - 2.0 * std::cos(two_pi / time.sides));
    Mat3 power = Mat3::identity();
    for (int k = 0; k < time.sides; ++k) power = product * power;
    check.root_residual = power.max_abs_diff(Mat3::identity());
    return check;
}

double closure_residual(const RationalTime& time) {
    return closure_check(time).max_residual();
}

int SkewPolygon::distinct_sides() const {
    int n = 0;
    for (const auto flag : virtual_corner) n += (flag == 0);
    return n;
}

double SkewPolygon::mean_vertex_height() const {
    double acc = 0.0;
    const int n = segments();
    for (int k = 0; k < n; ++k) acc += vertices[k].z;
    return acc / n;
}

Vec3 SkewPolygon::position_at(double s) const {
    const int n = segments();
    double u = std::fmod(s, two_pi);
    if (u < 0.0) u += two_pi;
    int k = static_cast<int>(u / side_length);
    if (k >= n) k = n - 1;
    const double frac = (u - k * side_length) / side_length;
    const Vec3 p = vertices[k] * (1.0 - frac) + vertices[k + 1] * frac;
    return p + Vec3{0, 0, vertical_offset};
}

SkewPolygon build_polygon(const RationalTime& time) {
    const double residual = closure_residual(time);
    if (residual > 1e-8)
        throw std::runtime_error("build_polygon: closure residual " + std::to_string(residual) +
                                 " exceeds 1e-8 for M=" + std::to_string(time.sides) +
                                 " p=" + std::to_string(time.p) + " q=" + std::to_string(time.q));

    const DeltaTrain train = delta_train(time);
    const int n = time.sides * static_cast<int>(time.q);
    const auto frames = propagate_frame(train, Frame::identity(), n);

    SkewPolygon poly;
    poly.time = time;
    poly.side_length = two_pi / n;
    poly.rho = train.rho;
    poly.psi_hat0 = train.psi_hat0;
    poly.tangents.reserve(n);
    poly.virtual_corner.reserve(n);
    poly.vertices.reserve(n + 1);
    poly.vertices.push_back({0, 0, 0});
    for (int k = 0; k < n; ++k) {
        poly.tangents.push_back(frames[k].t);
        poly.virtual_corner.push_back(train.corner_is_virtual(k % time.q) ? 1 : 0);
        poly.vertices.push_back(poly.vertices.back() + poly.side_length * frames[k].t);
    }
    return align_polygon(poly, time.sides);
}

SkewPolygon align_polygon(const SkewPolygon& raw, int sides) {
    const int n = raw.segments();
    if (sides < 3 || n % sides != 0)
        throw std::invalid_argument("align_polygon: segment count is not a multiple of the side count");
    const int per_sector = n / sides;  // segments per 2*pi/M sector

    // unit chords across s = 0; X(-2*pi/M) wraps through the closure gap
    const Vec3 wrap = raw.vertices[n] - raw.vertices[0];
    const Vec3 x_prev = raw.vertices[(sides - 1) * per_sector] - wrap;
    const Vec3 v_plus = (raw.vertices[per_sector] - raw.vertices[0]).normalized();
    const Vec3 v_minus = (raw.vertices[0] - x_prev).normalized();

    const Vec3 w_raw = v_minus.cross(v_plus);
    Mat3 r1 = Mat3::identity();
    if (w_raw.norm() > 0.0) {
        const Vec3 w = w_raw.normalized();
        if (w.z != 0.0) {
            if (w.z <= -1.0 + 1e-15) {
                r1 = Mat3::axis_angle({1, 0, 0}, std::numbers::pi);  // antipodal: any horizontal axis
            } else {
                const Vec3 axis = w.cross({0, 0, 1});
                if (axis.norm() > 0.0) r1 = Mat3::axis_angle(axis, safe_acos(w.z));
            }
        }
    }
    const Vec3 v_new = r1 * v_plus;
    const Mat3 r2 = Mat3::rotation_z(-std::atan2(v_new.y, v_new.x));
    const Mat3 r = r2 * r1;

    SkewPolygon out = raw;
    for (auto& v : out.vertices) v = r * v;
    for (auto& t : out.tangents) t = r * t;

    Vec3 center{0, 0, 0};
    for (int k = 0; k < sides; ++k) center += out.vertices[k * per_sector];
    center = center * (1.0 / sides);
    const Vec3 shift{center.x, center.y, 0.0};
    for (auto& v : out.vertices) v -= shift;
    return out;
}

}  // namespace vfe
