#pragma once

#include <array>
#include <cmath>
#include <ostream>

namespace tubular {

/// Point or vector in model coordinates. For 2-D charts the z component
/// stays zero.
struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_ = 0.0) : x(x_), y(y_), z(z_) {}

    double& operator[](int i) { return (&x)[i]; }
    double operator[](int i) const { return (&x)[i]; }

    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double c) { x *= c; y *= c; z *= c; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator*(Vec3 a, double c) { return a *= c; }
inline Vec3 operator*(double c, Vec3 a) { return a *= c; }
inline Vec3 operator/(Vec3 a, double c) { return a *= (1.0 / c); }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline double dist(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }
inline bool finite(const Vec3& a) { return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z); }

inline Vec3 min_componentwise(const Vec3& a, const Vec3& b) {
    return {std::fmin(a.x, b.x), std::fmin(a.y, b.y), std::fmin(a.z, b.z)};
}
inline Vec3 max_componentwise(const Vec3& a, const Vec3& b) {
    return {std::fmax(a.x, b.x), std::fmax(a.y, b.y), std::fmax(a.z, b.z)};
}

inline std::ostream& operator<<(std::ostream& os, const Vec3& v) {
    return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}

/// Row-major 3x3 matrix, just enough linear algebra for frames, metrics
/// and Newton steps.
struct Mat3 {
    std::array<double, 9> m{};  // m[3*row + col]

    static Mat3 identity() {
        Mat3 r;
        r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return r;
    }
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        Mat3 r;
        for (int i = 0; i < 3; ++i) {
            r.m[3 * i + 0] = c0[i];
            r.m[3 * i + 1] = c1[i];
            r.m[3 * i + 2] = c2[i];
        }
        return r;
    }
    static Mat3 diagonal(double a, double b, double c) {
        Mat3 r;
        r.m = {a, 0, 0, 0, b, 0, 0, 0, c};
        return r;
    }

    double& operator()(int r, int c) { return m[3 * r + c]; }
    double operator()(int r, int c) const { return m[3 * r + c]; }

    Vec3 row(int r) const { return {m[3 * r], m[3 * r + 1], m[3 * r + 2]}; }
    Vec3 col(int c) const { return {m[c], m[3 + c], m[6 + c]}; }

    Mat3 operator*(double s) const {
        Mat3 r = *this;
        for (double& v : r.m) v *= s;
        return r;
    }
};

inline Vec3 operator*(const Mat3& a, const Vec3& v) {
    return {dot(a.row(0), v), dot(a.row(1), v), dot(a.row(2), v)};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

inline double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

/// Solve a*x = b by Gaussian elimination with partial pivoting.
/// Returns false if the pivot collapses (singular within float noise).
inline bool solve3(const Mat3& a, const Vec3& b, Vec3& x) {
    double aug[3][4];
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) aug[i][j] = a(i, j);
        aug[i][3] = b[i];
    }
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(aug[r][col]) > std::fabs(aug[piv][col])) piv = r;
        if (std::fabs(aug[piv][col]) < 1e-300) return false;
        if (piv != col)
            for (int j = col; j < 4; ++j) std::swap(aug[piv][j], aug[col][j]);
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            double f = aug[r][col] / aug[col][col];
            for (int j = col; j < 4; ++j) aug[r][j] -= f * aug[col][j];
        }
    }
    x = {aug[0][3] / aug[0][0], aug[1][3] / aug[1][1], aug[2][3] / aug[2][2]};
    return true;
}

inline bool invert3(const Mat3& a, Mat3& out) {
    Vec3 c0, c1, c2;
    if (!solve3(a, {1, 0, 0}, c0)) return false;
    if (!solve3(a, {0, 1, 0}, c1)) return false;
    if (!solve3(a, {0, 0, 1}, c2)) return false;
    out = Mat3::from_columns(c0, c1, c2);
    return true;
}

}  // namespace tubular
