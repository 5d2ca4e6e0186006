#pragma once

#include <array>
#include <cmath>

namespace vfe {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const {
        const double n = norm();
        return {x / n, y / n, z / n};
    }
    double max_abs() const {
        return std::max(std::abs(x), std::max(std::abs(y), std::abs(z)));
    }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

/// 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> a{};

    static constexpr Mat3 identity() {
        Mat3 m;
        m.a = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return m;
    }

    /// Rotation by `angle` about the z-axis.
    static Mat3 rotation_z(double angle) {
        const double c = std::cos(angle), s = std::sin(angle);
        Mat3 m;
        m.a = {c, -s, 0, s, c, 0, 0, 0, 1};
        return m;
    }

    /// Rotation by `angle` about `axis` (need not be unit).
    static Mat3 axis_angle(const Vec3& axis, double angle) {
        const Vec3 u = axis.normalized();
        const double c = std::cos(angle), s = std::sin(angle), t = 1.0 - c;
        Mat3 m;
        m.a = {t * u.x * u.x + c,       t * u.x * u.y - s * u.z, t * u.x * u.z + s * u.y,
               t * u.x * u.y + s * u.z, t * u.y * u.y + c,       t * u.y * u.z - s * u.x,
               t * u.x * u.z - s * u.y, t * u.y * u.z + s * u.x, t * u.z * u.z + c};
        return m;
    }

    double operator()(int r, int c) const { return a[3 * r + c]; }
    double& operator()(int r, int c) { return a[3 * r + c]; }

    Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j) + (*this)(i, 2) * o(2, j);
        return r;
    }

    double trace() const { return a[0] + a[4] + a[8]; }

    double max_abs_diff(const Mat3& o) const {
        double d = 0.0;
        for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(a[i] - o.a[i]));
        return d;
    }
};

/// Orthonormal right-handed triple (T, e1, e2), stored as rows of a frame matrix.
struct Frame {
    Vec3 t{1, 0, 0};
    Vec3 e1{0, 1, 0};
    Vec3 e2{0, 0, 1};

    static constexpr Frame identity() { return Frame{}; }

    /// Largest deviation from unit norm, pairwise orthogonality and det = +1.
    double orthonormality_error() const {
        double e = std::abs(t.norm() - 1.0);
        e = std::max(e, std::abs(e1.norm() - 1.0));
        e = std::max(e, std::abs(e2.norm() - 1.0));
        e = std::max(e, std::abs(t.dot(e1)));
        e = std::max(e, std::abs(t.dot(e2)));
        e = std::max(e, std::abs(e1.dot(e2)));
        e = std::max(e, std::abs(t.cross(e1).dot(e2) - 1.0));
        return e;
    }

    /// Left-multiply the stacked row matrix (T; e1; e2) by `m`.
    Frame transformed(const Mat3& m) const {
        Frame f;
        f.t  = {m(0, 0) * t.x + m(0, 1) * e1.x + m(0, 2) * e2.x,
                m(0, 0) * t.y + m(0, 1) * e1.y + m(0, 2) * e2.y,
                m(0, 0) * t.z + m(0, 1) * e1.z + m(0, 2) * e2.z};
        f.e1 = {m(1, 0) * t.x + m(1, 1) * e1.x + m(1, 2) * e2.x,
                m(1, 0) * t.y + m(1, 1) * e1.y + m(1, 2) * e2.y,
                m(1, 0) * t.z + m(1, 1) * e1.z + m(1, 2) * e2.z};
        f.e2 = {m(2, 0) * t.x + m(2, 1) * e1.x + m(2, 2) * e2.x,
                m(2, 0) * t.y + m(2, 1) * e1.y + m(2, 2) * e2.y,
                m(2, 0) * t.z + m(2, 1) * e1.z + m(2, 2) * e2.z};
        return f;
    }
};

/// arccos with the argument clamped to [-1, 1] to absorb 1-ulp overshoot.
inline double safe_acos(double x) {
    return std::acos(std::min(1.0, std::max(-1.0, x)));
}

}  // namespace vfe
