#include "ctrx/surface.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ctrx/jet.hpp"
#include "ctrx/tractrix.hpp"

namespace ctrx {

namespace {

double sq(double x) { return x * x; }

// Conformal factor numerator and denominator of the analytic metric:
// E = num * ratio(t) / den^2, G = num / den^2.
void metric_pieces(const SurfacePatch& s, double t, double alpha, double& num, double& den) {
    num = 0.0;
    den = 1.0;
    switch (s.regime) {
        case Regime::Supercritical:
            num = s.R * s.R - 1.0;
            den = std::cos(alpha) + s.R * std::cosh(s.lambda * t);
            break;
        case Regime::Critical:
            num = 4.0;
            den = 1.0 + alpha * alpha + t * t;
            break;
        case Regime::Subcritical:
            num = 1.0 - s.R * s.R;
            den = static_cast<double>(s.branch) * std::cosh(alpha) + s.R * std::cos(s.lambda * t);
            break;
    }
}

void metric_dual2(const SurfacePatch& s, double t, double alpha, Dual2& E, Dual2& G) {
    const Dual2 tj = Dual2::variable_t(t);
    const Dual2 aj = Dual2::variable_alpha(alpha);
    switch (s.regime) {
        case Regime::Supercritical: {
            const double num = s.R * s.R - 1.0;
            const Dual2 den = cos(aj) + s.R * cosh(s.lambda * tj);
            const Dual2 inv2 = inverse(den * den);
            const Dual2 sh = sinh(s.lambda * tj);
            E = num * sh * sh * inv2;
            G = num * inv2;
            return;
        }
        case Regime::Critical: {
            const Dual2 den = 1.0 + aj * aj + tj * tj;
            const Dual2 inv2 = inverse(den * den);
            E = 4.0 * tj * tj * inv2;
            G = 4.0 * inv2;
            return;
        }
        case Regime::Subcritical: {
            const double num = 1.0 - s.R * s.R;
            const Dual2 den =
                static_cast<double>(s.branch) * cosh(aj) + s.R * cos(s.lambda * tj);
            const Dual2 inv2 = inverse(den * den);
            const Dual2 sn = sin(s.lambda * tj);
            E = num * sn * sn * inv2;
            G = num * inv2;
            return;
        }
    }
}

}  // namespace

SurfacePatch make_surface(double R, int branch) {
    const Regime regime = regime_of(R);
    double lambda = 0.0;
    Interval t_range{}, alpha_range{};
    switch (regime) {
        case Regime::Supercritical:
            lambda = std::sqrt(R * R - 1.0) / R;
            t_range = {-6.0 / lambda, 6.0 / lambda};
            alpha_range = {0.0, 2.0 * std::numbers::pi};
            break;
        case Regime::Critical:
            t_range = {-6.0, 6.0};
            alpha_range = {-6.0, 6.0};
            break;
        case Regime::Subcritical:
            lambda = std::sqrt(1.0 - R * R) / R;
            t_range = {0.0, std::numbers::pi / lambda};
            alpha_range = {-6.0, 6.0};
            break;
    }
    if (branch != +1 && branch != -1) {
        throw std::invalid_argument("branch must be +1 or -1");
    }
    return {R, regime, branch, lambda, t_range, alpha_range};
}

SurfacePatch make_surface(double R, int branch, Interval t_range, Interval alpha_range) {
    SurfacePatch s = make_surface(R, branch);
    if (t_range.lo > t_range.hi || alpha_range.lo > alpha_range.hi) {
        throw std::invalid_argument("patch ranges must have lo <= hi");
    }
    s.t_range = t_range;
    s.alpha_range = alpha_range;
    return s;
}

double surface_xi2(const SurfacePatch& s, double t, double alpha) {
    double c1, c2;
    sweep_constants(s.regime, s.branch, alpha, c1, c2);
    return xi_formula(s.regime, s.R, s.lambda, c1, c2, t).y;
}

SurfaceFrame surface_point(const SurfacePatch& s, double t, double alpha) {
    const SurfaceJet2 j = surface_jet2(s, t, alpha);
    return {j.f, j.ft, j.fa};
}

SurfaceJet2 surface_jet2(const SurfacePatch& s, double t, double alpha) {
    const Vec3<Dual2> f =
        surface_position(s, Dual2::variable_t(t), Dual2::variable_alpha(alpha));
    SurfaceJet2 out;
    out.f = {f.x.v, f.y.v, f.z.v};
    out.ft = {f.x.dt, f.y.dt, f.z.dt};
    out.fa = {f.x.da, f.y.da, f.z.da};
    out.ftt = {f.x.dtt, f.y.dtt, f.z.dtt};
    out.fta = {f.x.dta, f.y.dta, f.z.dta};
    out.faa = {f.x.daa, f.y.daa, f.z.daa};
    return out;
}

MetricTensor metric_analytic(const SurfacePatch& s, double t, double alpha) {
    double num, den;
    metric_pieces(s, t, alpha, num, den);
    const double g = num / sq(den);
    return {g * isothermic_ratio(s, t), 0.0, g};
}

double coordinate_circle_radius(const SurfacePatch& s, double t) {
    switch (s.regime) {
        case Regime::Supercritical: {
            const double ch = std::cosh(s.lambda * t);
            return std::sqrt(s.R * s.R - 1.0) / std::sqrt(s.R * s.R * ch * ch - 1.0);
        }
        case Regime::Critical:
            return 1.0 / std::sqrt(t * t + 1.0);
        case Regime::Subcritical:
        default: {
            const double c = std::cos(s.lambda * t);
            return std::sqrt(1.0 - s.R * s.R) / std::sqrt(1.0 - s.R * s.R * c * c);
        }
    }
}

CoordinateCircleCheck coordinate_circle_check(const SurfacePatch& s, double t, int samples) {
    if (samples < 2) throw std::invalid_argument("coordinate circle check needs >= 2 samples");
    // Sweep the free parameter over one turn (supercritical) or a window of
    // the real line (the alpha-curves are regular for every alpha).
    const Interval range = (s.regime == Regime::Supercritical)
                               ? Interval{0.0, 2.0 * std::numbers::pi}
                               : Interval{-2.5, 2.5};
    const Jet3 tj = Jet3::constant(t);
    double r_min = 0.0, r_max = 0.0, tau_max = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double a = range.lo + range.length() * (i + 0.5) / samples;
        Jet3 c1, c2;
        sweep_constants(s.regime, s.branch, Jet3::variable(a), c1, c2);
        const Vec3<Jet3> g = position_formula(s.regime, s.R, s.lambda, c1, c2, tj);
        const Vec3d d1{g.x.d1, g.y.d1, g.z.d1};
        const Vec3d d2{g.x.d2, g.y.d2, g.z.d2};
        const Vec3d d3{g.x.d3, g.y.d3, g.z.d3};
        const Vec3d cr = cross(d1, d2);
        const double v = norm(d1), cr_norm = norm(cr);
        const double radius = (v * v * v) / cr_norm;
        const double tau = triple(d1, d2, d3) / (cr_norm * cr_norm);
        if (i == 0) {
            r_min = r_max = radius;
        } else {
            r_min = std::min(r_min, radius);
            r_max = std::max(r_max, radius);
        }
        tau_max = std::max(tau_max, std::abs(tau));
    }
    return {0.5 * (r_min + r_max), r_max - r_min, tau_max};
}

double gauss_curvature(const SurfacePatch& s, double t, double alpha) {
    Dual2 E, G;
    metric_dual2(s, t, alpha, E, G);
    if (E.v < 1e-13) {
        throw std::domain_error("Gauss curvature undefined on a cuspidal edge (E = 0)");
    }
    const Dual2 W = sqrt(E * G);
    // K = -( d/dt (G_t / W) + d/da (E_a / W) ) / (2 W) for orthogonal
    // coordinates, expanded through the second metric derivatives.
    const double term_t = G.dtt * W.v - G.dt * W.dt;
    const double term_a = E.daa * W.v - E.da * W.da;
    return -(term_t + term_a) / (2.0 * W.v * W.v * W.v);
}

CurvatureLineProbe curvature_line_probe(const SurfacePatch& s, double t, double alpha) {
    const SurfaceJet2 j = surface_jet2(s, t, alpha);
    const Vec3d n = cross(j.ft, j.fa);
    const double n_norm = norm(n);
    if (n_norm < 1e-12) {
        throw std::domain_error("curvature line probe undefined at a singular surface point");
    }
    return {dot(j.ft, j.fa), dot(n, j.fta) / n_norm};
}

double surface_tracing_residual(const SurfacePatch& s, double t, double alpha) {
    const double xi2 = surface_xi2(s, t, alpha);
    if (std::abs(xi2) < 1e-12) {
        throw std::domain_error("surface tracing residual undefined on a cuspidal edge");
    }
    const SurfaceFrame fr = surface_point(s, t, alpha);
    return distance(fr.f + fr.ft / xi2, directrix_point(s.R, t));
}

std::vector<double> surface_singular_parameters(const SurfacePatch& s, Interval window) {
    TractrixParams p;
    p.R = s.R;
    p.regime = s.regime;
    p.lambda = s.lambda;
    sweep_constants(s.regime, s.branch, 0.0, p.c1, p.c2);
    return singular_parameters(p, window);
}

double isothermic_ratio(const SurfacePatch& s, double t) {
    switch (s.regime) {
        case Regime::Supercritical: return sq(std::sinh(s.lambda * t));
        case Regime::Critical: return t * t;
        case Regime::Subcritical:
        default: return sq(std::sin(s.lambda * t));
    }
}

}  // namespace ctrx
