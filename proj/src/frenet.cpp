#include "ctrx/frenet.hpp"

#include <cmath>
#include <stdexcept>

#include "ctrx/tractrix.hpp"

namespace ctrx {

FrenetData frenet(const TractrixParams& p, double t) {
    const CurveSample s = eval_curve(p, t);
    if (std::abs(s.xi.y) < 1e-10) {
        throw std::domain_error("Frenet data undefined at a singular point");
    }
    const Vec3d cr = cross(s.d1, s.d2);
    const double v = norm(s.d1);
    const double cr_norm = norm(cr);
    const double kappa = cr_norm / (v * v * v);
    if (kappa < 1e-12) {
        throw std::domain_error("Frenet data undefined where curvature vanishes");
    }
    FrenetData fd;
    fd.t = t;
    fd.kappa = kappa;
    fd.tau = triple(s.d1, s.d2, s.d3) / (cr_norm * cr_norm);
    fd.tangent = s.d1 / v;
    fd.binormal = cr / cr_norm;
    fd.normal = cross(fd.binormal, fd.tangent);
    return fd;
}

bool is_planar(const TractrixParams& p) {
    constexpr double eps = 1e-12;
    if (std::abs(p.c2) > eps) return false;
    if (p.regime == Regime::Critical) return std::abs(p.c1 - 1.0) <= eps;
    return std::abs(p.c1 - 1.0) <= eps || std::abs(p.c1 + 1.0) <= eps;
}

std::vector<std::pair<double, double>> torsion_profile(const TractrixParams& p, Interval window,
                                                       int n) {
    if (n < 1) throw std::invalid_argument("torsion profile needs at least one sample");
    constexpr double margin = 1e-3;
    for (const double ts : singular_parameters(p, {window.lo - margin, window.hi + margin})) {
        if (ts >= window.lo - margin && ts <= window.hi + margin) {
            throw std::invalid_argument("torsion profile window too close to a singular point");
        }
    }
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(n));
    const double step = (n > 1) ? window.length() / (n - 1) : 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = window.lo + step * i;
        out.emplace_back(t, frenet(p, t).tau);
    }
    return out;
}

}  // namespace ctrx
