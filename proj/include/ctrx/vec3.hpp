#pragma once

#include <cmath>

namespace ctrx {

// Minimal 3-vector over an arbitrary scalar type. The scalar may be a plain
// double or one of the jet types from jet.hpp, so the same geometric code
// yields values and exact derivatives.
template <class T>
struct Vec3 {
    T x{}, y{}, z{};
};

using Vec3d = Vec3<double>;

template <class T>
Vec3<T> operator+(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

template <class T>
Vec3<T> operator-(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

template <class T>
Vec3<T> operator-(const Vec3<T>& a) {
    return {-a.x, -a.y, -a.z};
}

template <class T, class S>
Vec3<T> operator*(const S& s, const Vec3<T>& v) {
    return {s * v.x, s * v.y, s * v.z};
}

template <class T, class S>
Vec3<T> operator*(const Vec3<T>& v, const S& s) {
    return s * v;
}

template <class T, class S>
Vec3<T> operator/(const Vec3<T>& v, const S& s) {
    return {v.x / s, v.y / s, v.z / s};
}

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
    return {a.y * b.z - a.z * b.y,
            a.z * b.x - a.x * b.z,
            a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3d& v) { return std::sqrt(dot(v, v)); }

inline Vec3d normalized(const Vec3d& v) { return v / norm(v); }

inline double distance(const Vec3d& a, const Vec3d& b) { return norm(a - b); }

// det of the matrix with columns (a, b, c)
inline double triple(const Vec3d& a, const Vec3d& b, const Vec3d& c) {
    return dot(a, cross(b, c));
}

inline Vec3d rotate_z(const Vec3d& v, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y, v.z};
}

}  // namespace ctrx
