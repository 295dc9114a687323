#include "ctrx/params.hpp"

#include <cmath>
#include <stdexcept>

namespace ctrx {

Regime regime_of(double R) {
    if (!(R > 0.0) || !std::isfinite(R)) {
        throw std::invalid_argument("directrix radius R must be positive and finite");
    }
    if (R > 1.0) return Regime::Supercritical;
    if (R == 1.0) return Regime::Critical;
    return Regime::Subcritical;
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Supercritical: return "supercritical";
        case Regime::Critical: return "critical";
        case Regime::Subcritical: return "subcritical";
    }
    return "?";
}

namespace {

double derived_lambda(Regime regime, double R) {
    switch (regime) {
        case Regime::Supercritical: return std::sqrt(R * R - 1.0) / R;
        case Regime::Critical: return 0.0;
        case Regime::Subcritical: return std::sqrt(1.0 - R * R) / R;
    }
    return 0.0;
}

}  // namespace

double constraint_residual(const TractrixParams& p) {
    const double scale = std::max({1.0, p.c1 * p.c1, p.c2 * p.c2});
    switch (p.regime) {
        case Regime::Supercritical:
            return std::abs(p.c1 * p.c1 + p.c2 * p.c2 - 1.0) / scale;
        case Regime::Critical:
            return std::abs(4.0 * (p.c1 - 1.0) - p.c2 * p.c2) / scale;
        case Regime::Subcritical:
            return std::abs(p.c1 * p.c1 - p.c2 * p.c2 - 1.0) / scale;
    }
    return 0.0;
}

TractrixParams make_params(double R, double selector, int branch) {
    if (!std::isfinite(selector)) {
        throw std::invalid_argument("selector must be finite");
    }
    const Regime regime = regime_of(R);
    TractrixParams p;
    p.R = R;
    p.regime = regime;
    p.lambda = derived_lambda(regime, R);
    switch (regime) {
        case Regime::Supercritical:
            p.c1 = std::cos(selector);
            p.c2 = std::sin(selector);
            break;
        case Regime::Critical:
            p.c1 = 1.0 + selector * selector;
            p.c2 = 2.0 * selector;
            break;
        case Regime::Subcritical:
            if (branch != +1 && branch != -1) {
                throw std::invalid_argument("subcritical branch must be +1 or -1");
            }
            p.c1 = static_cast<double>(branch) * std::cosh(selector);
            p.c2 = std::sinh(selector);
            break;
    }
    if (constraint_residual(p) > 1e-12) {
        throw std::invalid_argument("constructed constants violate the regime constraint");
    }
    return p;
}

TractrixParams params_from_constants(double R, double c1, double c2) {
    if (!std::isfinite(c1) || !std::isfinite(c2)) {
        throw std::invalid_argument("constants must be finite");
    }
    const Regime regime = regime_of(R);
    TractrixParams p{R, c1, c2, derived_lambda(regime, R), regime};
    if (constraint_residual(p) > 1e-12) {
        throw std::invalid_argument("constants (c1, c2) violate the regime constraint for this R");
    }
    return p;
}

std::optional<Rational> suggest_rational(double x, long long max_den, double tol) {
    if (!std::isfinite(x) || max_den < 1) return std::nullopt;
    // Continued-fraction convergents p_k/q_k of x.
    long long p_prev = 1, q_prev = 0;
    long long p_cur = static_cast<long long>(std::floor(x));
    long long q_cur = 1;
    double frac = x - std::floor(x);
    for (int k = 0; k < 64; ++k) {
        if (q_cur > max_den) break;
        const double approx = static_cast<double>(p_cur) / static_cast<double>(q_cur);
        if (std::abs(x - approx) <= tol) {
            return Rational{p_cur, q_cur};
        }
        if (frac <= 0.0) break;
        const double inv = 1.0 / frac;
        const double ai = std::floor(inv);
        if (!(ai < 9e18)) break;
        frac = inv - ai;
        const long long a = static_cast<long long>(ai);
        const long long p_next = a * p_cur + p_prev;
        const long long q_next = a * q_cur + q_prev;
        p_prev = p_cur; q_prev = q_cur;
        p_cur = p_next; q_cur = q_next;
    }
    return std::nullopt;
}

}  // namespace ctrx
