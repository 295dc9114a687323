#pragma once

#include <cmath>

// Forward-mode automatic differentiation on small fixed-order jets.
//
// Jet3 is a univariate third-order jet (value and d/dt, d2/dt2, d3/dt3),
// enough for curvature and torsion of a parametric curve. Dual2 is a
// bivariate second-order jet in (t, alpha), enough for surface metric and
// second-fundamental-form work. Coefficients are stored as derivatives,
// not Taylor coefficients, so products follow the Leibniz rule.

namespace ctrx {

struct Jet3 {
    double v{}, d1{}, d2{}, d3{};

    static Jet3 variable(double t) { return {t, 1.0, 0.0, 0.0}; }
    static Jet3 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
    return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}
inline Jet3 operator-(const Jet3& a, const Jet3& b) {
    return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}
inline Jet3 operator-(const Jet3& a) { return {-a.v, -a.d1, -a.d2, -a.d3}; }

inline Jet3 operator*(const Jet3& a, const Jet3& b) {
    return {a.v * b.v,
            a.d1 * b.v + a.v * b.d1,
            a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2,
            a.d3 * b.v + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.v * b.d3};
}

inline Jet3 operator+(const Jet3& a, double s) { return {a.v + s, a.d1, a.d2, a.d3}; }
inline Jet3 operator+(double s, const Jet3& a) { return a + s; }
inline Jet3 operator-(const Jet3& a, double s) { return {a.v - s, a.d1, a.d2, a.d3}; }
inline Jet3 operator-(double s, const Jet3& a) { return {s - a.v, -a.d1, -a.d2, -a.d3}; }
inline Jet3 operator*(const Jet3& a, double s) { return {a.v * s, a.d1 * s, a.d2 * s, a.d3 * s}; }
inline Jet3 operator*(double s, const Jet3& a) { return a * s; }
inline Jet3 operator/(const Jet3& a, double s) { return a * (1.0 / s); }

// f(u) for scalar f with derivatives g0..g3 evaluated at u.v, composed by
// the chain rule (Faa di Bruno through order 3).
inline Jet3 jet_chain(const Jet3& u, double g0, double g1, double g2, double g3) {
    return {g0,
            g1 * u.d1,
            g2 * u.d1 * u.d1 + g1 * u.d2,
            g3 * u.d1 * u.d1 * u.d1 + 3.0 * g2 * u.d1 * u.d2 + g1 * u.d3};
}

inline Jet3 sin(const Jet3& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return jet_chain(u, s, c, -s, -c);
}
inline Jet3 cos(const Jet3& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return jet_chain(u, c, -s, -c, s);
}
inline Jet3 sinh(const Jet3& u) {
    const double s = std::sinh(u.v), c = std::cosh(u.v);
    return jet_chain(u, s, c, s, c);
}
inline Jet3 cosh(const Jet3& u) {
    const double s = std::sinh(u.v), c = std::cosh(u.v);
    return jet_chain(u, c, s, c, s);
}

inline Jet3 inverse(const Jet3& u) {
    const double w = 1.0 / u.v;
    return jet_chain(u, w, -w * w, 2.0 * w * w * w, -6.0 * w * w * w * w);
}
inline Jet3 operator/(const Jet3& a, const Jet3& b) { return a * inverse(b); }
inline Jet3 operator/(double s, const Jet3& b) { return inverse(b) * s; }

struct Dual2 {
    double v{}, dt{}, da{}, dtt{}, dta{}, daa{};

    static Dual2 variable_t(double t) { return {t, 1.0, 0.0, 0.0, 0.0, 0.0}; }
    static Dual2 variable_alpha(double a) { return {a, 0.0, 1.0, 0.0, 0.0, 0.0}; }
    static Dual2 constant(double c) { return {c, 0.0, 0.0, 0.0, 0.0, 0.0}; }
};

inline Dual2 operator+(const Dual2& a, const Dual2& b) {
    return {a.v + b.v, a.dt + b.dt, a.da + b.da, a.dtt + b.dtt, a.dta + b.dta, a.daa + b.daa};
}
inline Dual2 operator-(const Dual2& a, const Dual2& b) {
    return {a.v - b.v, a.dt - b.dt, a.da - b.da, a.dtt - b.dtt, a.dta - b.dta, a.daa - b.daa};
}
inline Dual2 operator-(const Dual2& a) {
    return {-a.v, -a.dt, -a.da, -a.dtt, -a.dta, -a.daa};
}

inline Dual2 operator*(const Dual2& a, const Dual2& b) {
    return {a.v * b.v,
            a.dt * b.v + a.v * b.dt,
            a.da * b.v + a.v * b.da,
            a.dtt * b.v + 2.0 * a.dt * b.dt + a.v * b.dtt,
            a.dta * b.v + a.dt * b.da + a.da * b.dt + a.v * b.dta,
            a.daa * b.v + 2.0 * a.da * b.da + a.v * b.daa};
}

inline Dual2 operator+(const Dual2& a, double s) { Dual2 r = a; r.v += s; return r; }
inline Dual2 operator+(double s, const Dual2& a) { return a + s; }
inline Dual2 operator-(const Dual2& a, double s) { Dual2 r = a; r.v -= s; return r; }
inline Dual2 operator-(double s, const Dual2& a) { return (-a) + s; }
inline Dual2 operator*(const Dual2& a, double s) {
    return {a.v * s, a.dt * s, a.da * s, a.dtt * s, a.dta * s, a.daa * s};
}
inline Dual2 operator*(double s, const Dual2& a) { return a * s; }
inline Dual2 operator/(const Dual2& a, double s) { return a * (1.0 / s); }

inline Dual2 dual_chain(const Dual2& u, double g0, double g1, double g2) {
    return {g0,
            g1 * u.dt,
            g1 * u.da,
            g2 * u.dt * u.dt + g1 * u.dtt,
            g2 * u.dt * u.da + g1 * u.dta,
            g2 * u.da * u.da + g1 * u.daa};
}

inline Dual2 sin(const Dual2& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return dual_chain(u, s, c, -s);
}
inline Dual2 cos(const Dual2& u) {
    const double s = std::sin(u.v), c = std::cos(u.v);
    return dual_chain(u, c, -s, -c);
}
inline Dual2 sinh(const Dual2& u) {
    const double s = std::sinh(u.v), c = std::cosh(u.v);
    return dual_chain(u, s, c, s);
}
inline Dual2 cosh(const Dual2& u) {
    const double s = std::sinh(u.v), c = std::cosh(u.v);
    return dual_chain(u, c, s, c);
}
inline Dual2 sqrt(const Dual2& u) {
    const double r = std::sqrt(u.v);
    return dual_chain(u, r, 0.5 / r, -0.25 / (r * u.v));
}

inline Dual2 inverse(const Dual2& u) {
    const double w = 1.0 / u.v;
    return dual_chain(u, w, -w * w, 2.0 * w * w * w);
}
inline Dual2 operator/(const Dual2& a, const Dual2& b) { return a * inverse(b); }
inline Dual2 operator/(double s, const Dual2& b) { return inverse(b) * s; }

}  // namespace ctrx
