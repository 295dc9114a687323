#pragma once

#include "ctrx/jet.hpp"
#include "ctrx/params.hpp"
#include "ctrx/vec3.hpp"

// Closed-form evaluation kernels, templated on the scalar type so the same
// expressions produce plain values (double), curve derivatives (Jet3 in t or
// in alpha), or surface partials (Dual2 in (t, alpha)).

namespace ctrx {

// Unqualified calls below resolve to std:: for double and to the jet
// overloads otherwise.
using std::cos;
using std::cosh;
using std::sin;
using std::sinh;

template <class T>
T regime_denominator(Regime regime, double R, double lambda, const T& c1, const T& t) {
    switch (regime) {
        case Regime::Supercritical:
            return c1 * (1.0 / R) + cosh(lambda * t);
        case Regime::Critical:
            return c1 + t * t;
        case Regime::Subcritical:
        default:
            return c1 * (1.0 / R) + cos(lambda * t);
    }
}

// The triple (xi1, xi2, xi3) of the regime's closed form.
template <class T>
Vec3<T> xi_formula(Regime regime, double R, double lambda, const T& c1, const T& c2, const T& t) {
    switch (regime) {
        case Regime::Supercritical: {
            const T den = c1 * (1.0 / R) + cosh(lambda * t);
            return {(R - 1.0 / R) * cosh(lambda * t) / den,
                    lambda * sinh(lambda * t) / den,
                    lambda * c2 / den};
        }
        case Regime::Critical: {
            const T den = c1 + t * t;
            return {2.0 / den, 2.0 * t / den, c2 / den};
        }
        case Regime::Subcritical:
        default: {
            const T den = c1 * (1.0 / R) + cos(lambda * t);
            return {(R - 1.0 / R) * cos(lambda * t) / den,
                    -(lambda * sin(lambda * t)) / den,
                    lambda * c2 / den};
        }
    }
}

// Position vector: the xi triple carried around the directrix circle by the
// angle t/R.
template <class T>
Vec3<T> position_formula(Regime regime, double R, double lambda, const T& c1, const T& c2,
                         const T& t) {
    const Vec3<T> xi = xi_formula(regime, R, lambda, c1, c2, t);
    const T c = cos(t * (1.0 / R));
    const T s = sin(t * (1.0 / R));
    return {xi.x * c + xi.y * s, xi.x * s - xi.y * c, xi.z};
}

// Sweep constants as functions of the family parameter alpha:
//   Supercritical: (cos a, sin a); Critical: (1 + a^2, 2a);
//   Subcritical:   (branch*cosh a, sinh a).
template <class T>
void sweep_constants(Regime regime, int branch, const T& alpha, T& c1, T& c2) {
    switch (regime) {
        case Regime::Supercritical:
            c1 = cos(alpha);
            c2 = sin(alpha);
            break;
        case Regime::Critical:
            c1 = 1.0 + alpha * alpha;
            c2 = 2.0 * alpha;
            break;
        case Regime::Subcritical:
        default:
            c1 = (branch < 0) ? -cosh(alpha) : cosh(alpha);
            c2 = sinh(alpha);
            break;
    }
}

}  // namespace ctrx
