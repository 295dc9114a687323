#include "ctrx/tractrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ctrx/eval.hpp"

namespace ctrx {

namespace {

constexpr double kDenFloor = 1e-14;
constexpr double kSpeedFloor = 1e-12;

void require_finite(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("parameter t must be finite");
}

void require_window(Interval w) {
    if (!std::isfinite(w.lo) || !std::isfinite(w.hi) || w.lo > w.hi) {
        throw std::invalid_argument("window must be a bounded interval with lo <= hi");
    }
}

void check_denominator(const TractrixParams& p, double t) {
    const double den = regime_denominator(p.regime, p.R, p.lambda, p.c1, t);
    if (std::abs(den) < kDenFloor) {
        throw std::domain_error("singular evaluation: regime denominator vanishes");
    }
}

}  // namespace

Vec3d eval_xi(const TractrixParams& p, double t) {
    require_finite(t);
    check_denominator(p, t);
    return xi_formula(p.regime, p.R, p.lambda, p.c1, p.c2, t);
}

CurveSample eval_curve(const TractrixParams& p, double t) {
    require_finite(t);
    check_denominator(p, t);
    const Jet3 tj = Jet3::variable(t);
    const Jet3 c1 = Jet3::constant(p.c1);
    const Jet3 c2 = Jet3::constant(p.c2);
    const Vec3<Jet3> fj = position_formula(p.regime, p.R, p.lambda, c1, c2, tj);

    CurveSample s;
    s.t = t;
    s.xi = xi_formula(p.regime, p.R, p.lambda, p.c1, p.c2, t);
    s.f = {fj.x.v, fj.y.v, fj.z.v};
    s.d1 = {fj.x.d1, fj.y.d1, fj.z.d1};
    s.d2 = {fj.x.d2, fj.y.d2, fj.z.d2};
    s.d3 = {fj.x.d3, fj.y.d3, fj.z.d3};
    s.speed = norm(s.d1);
    return s;
}

Vec3d directrix_point(double R, double t) {
    return {R * std::cos(t / R), R * std::sin(t / R), 0.0};
}

Vec3d directrix_point(const TractrixParams& p, double t) { return directrix_point(p.R, t); }

Vec3d directrix_tangent(double R, double t) {
    return {-std::sin(t / R), std::cos(t / R), 0.0};
}

double tracing_residual(const TractrixParams& p, double t) {
    const CurveSample s = eval_curve(p, t);
    if (std::abs(s.xi.y) < kSpeedFloor) {
        throw std::domain_error("tracing residual undefined at a singular point (xi2 = 0)");
    }
    const Vec3d traced = s.f + s.d1 / s.xi.y;
    return distance(traced, directrix_point(p, t));
}

std::vector<double> singular_parameters(const TractrixParams& p, Interval window) {
    require_window(window);
    std::vector<double> out;
    if (p.regime != Regime::Subcritical) {
        if (window.contains(0.0)) out.push_back(0.0);
        return out;
    }
    const double spacing = std::numbers::pi / p.lambda;
    const long long n_lo = static_cast<long long>(std::ceil(window.lo / spacing - 1e-12));
    const long long n_hi = static_cast<long long>(std::floor(window.hi / spacing + 1e-12));
    for (long long n = n_lo; n <= n_hi; ++n) {
        out.push_back(static_cast<double>(n) * spacing);
    }
    return out;
}

Vec3d AsymptoticCircle::plus(double t) const {
    const double u = radius, th = t / R;
    return lambda * Vec3d{u * std::cos(th) + std::sin(th), u * std::sin(th) - std::cos(th), 0.0};
}

Vec3d AsymptoticCircle::minus(double t) const {
    const double u = radius, th = t / R;
    return lambda * Vec3d{u * std::cos(th) - std::sin(th), u * std::sin(th) + std::cos(th), 0.0};
}

Vec3d AsymptoticCircle::plus_derivative(double t) const {
    const double u = radius, th = t / R;
    return (lambda / R) *
           Vec3d{-u * std::sin(th) + std::cos(th), u * std::cos(th) + std::sin(th), 0.0};
}

Vec3d AsymptoticCircle::minus_derivative(double t) const {
    const double u = radius, th = t / R;
    return (lambda / R) *
           Vec3d{-u * std::sin(th) - std::cos(th), u * std::cos(th) - std::sin(th), 0.0};
}

AsymptoticTarget asymptotic_target(const TractrixParams& p) {
    switch (p.regime) {
        case Regime::Supercritical:
            return AsymptoticCircle{std::sqrt(p.R * p.R - 1.0), p.R, p.lambda};
        case Regime::Critical:
            return AsymptoticPoint{{0.0, 0.0, 0.0}};
        case Regime::Subcritical:
        default: {
            const double h = std::sqrt(1.0 - p.R * p.R);
            return AsymptoticPointPair{{0.0, 0.0, -h}, {0.0, 0.0, h}};
        }
    }
}

AsymptoticGap asymptotic_bound_check(const TractrixParams& p, double t) {
    require_finite(t);
    const Vec3d f = eval_curve(p, t).f;
    if (p.regime == Regime::Supercritical) {
        const AsymptoticCircle c{std::sqrt(p.R * p.R - 1.0), p.R, p.lambda};
        const Vec3d target = (t >= 0.0) ? c.plus(t) : c.minus(t);
        return {distance(f, target), 2.0 * std::exp(-p.lambda * std::abs(t))};
    }
    if (p.regime == Regime::Critical) {
        if (t == 0.0) throw std::domain_error("critical asymptotic bound requires t != 0");
        return {norm(f), 2.0 / std::abs(t)};
    }
    throw std::domain_error("asymptotic bound: unsupported regime (subcritical curve is periodic)");
}

double unit_length(const TractrixParams& p) {
    if (p.regime != Regime::Subcritical) {
        throw std::domain_error("unit length is defined only in the subcritical regime");
    }
    const double sign = (p.c1 >= 0.0) ? 1.0 : -1.0;
    return sign * std::log(std::abs((p.c1 + p.R) / (p.c1 - p.R)));
}

PeriodData period_data(const TractrixParams& p, std::optional<Rational> nu) {
    if (p.regime != Regime::Subcritical) {
        throw std::domain_error("period data is defined only in the subcritical regime");
    }
    const double root = std::sqrt(1.0 - p.R * p.R);  // = lambda * R
    PeriodData d;
    d.period = 2.0 * std::numbers::pi / p.lambda;
    d.phi = 2.0 * std::numbers::pi / root;
    d.closed = false;
    if (nu) {
        if (nu->den <= 0 || nu->num <= 0) {
            throw std::invalid_argument("nu must be a positive rational p/q");
        }
        const double value = static_cast<double>(nu->num) / static_cast<double>(nu->den);
        if (std::abs(value - root) > 1e-12) {
            throw std::invalid_argument("supplied nu does not match sqrt(1 - R^2)");
        }
        const long long g = std::gcd(nu->num, nu->den);
        // phi = 2*pi*q/p, so the first n with n*phi in 2*pi*Z is n = p.
        d.closed = true;
        d.petals = nu->num / g;
        d.windings = nu->den / g;
    }
    return d;
}

std::vector<LimitSample> linear_tractrix_limit(double selector, double t,
                                               std::span<const double> R_sequence) {
    require_finite(t);
    std::vector<LimitSample> out;
    out.reserve(R_sequence.size());
    double prev = 1.0;
    const double c1 = std::cos(selector), c2 = std::sin(selector);
    const Vec3d limit{-c1 / std::cosh(t), t - std::tanh(t), c2 / std::cosh(t)};
    for (const double R : R_sequence) {
        if (!(R > 1.0)) throw std::invalid_argument("R sequence entries must exceed 1");
        if (!(R > prev)) throw std::invalid_argument("R sequence must be strictly increasing");
        prev = R;
        const TractrixParams p = make_params(R, selector);
        const Vec3d f = eval_curve(p, t).f;
        const Vec3d shifted{f.x - R, f.y, f.z};
        out.push_back({R, shifted, limit, distance(shifted, limit)});
    }
    return out;
}

}  // namespace ctrx
