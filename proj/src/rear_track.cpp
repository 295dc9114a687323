#include "ctrx/rear_track.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "ctrx/tractrix.hpp"

namespace ctrx {

namespace {

// Natural cubic spline through (knots, values); evaluates value and first
// derivative. Standard tridiagonal solve for the knot second derivatives.
class CubicSpline {
  public:
    CubicSpline() = default;
    CubicSpline(std::vector<double> knots, std::vector<double> values)
        : t_(std::move(knots)), y_(std::move(values)) {
        const std::size_t n = t_.size();
        if (n < 3) throw std::invalid_argument("spline needs at least 3 samples");
        m_.assign(n, 0.0);
        std::vector<double> diag(n, 2.0), rhs(n, 0.0), upper(n, 0.0);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double hl = t_[i] - t_[i - 1], hr = t_[i + 1] - t_[i];
            const double mu = hl / (hl + hr);
            upper[i] = 1.0 - mu;
            rhs[i] = 6.0 / (hl + hr) *
                     ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
            // forward elimination against the previous row
            const double w = mu / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
        for (std::size_t i = n - 2; i >= 1; --i) {
            m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];
        }
    }

    double operator()(double t) const { return eval(t).first; }
    double derivative(double t) const { return eval(t).second; }

    double front() const { return t_.front(); }
    double back() const { return t_.back(); }

  private:
    std::pair<double, double> eval(double t) const {
        const auto it = std::upper_bound(t_.begin() + 1, t_.end() - 1, t);
        const std::size_t i = static_cast<std::size_t>(it - t_.begin());
        const double h = t_[i] - t_[i - 1];
        const double a = (t_[i] - t) / h, b = (t - t_[i - 1]) / h;
        const double value = a * y_[i - 1] + b * y_[i] +
                             ((a * a * a - a) * m_[i - 1] + (b * b * b - b) * m_[i]) * h * h / 6.0;
        const double deriv = (y_[i] - y_[i - 1]) / h +
                             ((3.0 * b * b - 1.0) * m_[i] - (3.0 * a * a - 1.0) * m_[i - 1]) * h / 6.0;
        return {value, deriv};
    }

    std::vector<double> t_, y_;
    std::vector<double> m_;  // second derivatives at knots
};

}  // namespace

Directrix circle_directrix(double R) {
    if (!(R > 0.0)) throw std::invalid_argument("circle directrix needs R > 0");
    return {[R](double t) { return directrix_point(R, t); },
            [R](double t) { return directrix_tangent(R, t); },
            true};
}

Directrix line_directrix() {
    return {[](double t) { return Vec3d{0.0, t, 0.0}; },
            [](double) { return Vec3d{0.0, 1.0, 0.0}; },
            true};
}

Directrix load_polyline_directrix(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) throw std::invalid_argument("cannot open directrix CSV: " + csv_path);
    std::vector<double> ts, xs, ys, zs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double v[4];
        char comma;
        if (!(row >> v[0])) continue;  // header or garbage
        for (int i = 1; i < 4; ++i) {
            if (!(row >> comma >> v[i])) {
                throw std::invalid_argument("directrix CSV rows must be t,x,y,z");
            }
        }
        ts.push_back(v[0]);
        xs.push_back(v[1]);
        ys.push_back(v[2]);
        zs.push_back(v[3]);
    }
    if (ts.size() < 4) throw std::invalid_argument("directrix CSV needs at least 4 samples");

    CubicSpline sx(ts, xs), sy(ts, ys), sz(ts, zs);

    // Reparametrize by accumulated arc length so the rod model holds: sample
    // the raw spline densely, integrate speed with the trapezoid rule, and
    // respline the coordinates over the new parameter.
    const int dense = 40 * static_cast<int>(ts.size());
    std::vector<double> s_knots(dense + 1), px(dense + 1), py(dense + 1), pz(dense + 1);
    double s = 0.0, prev_speed = 0.0;
    const double step = (ts.back() - ts.front()) / dense;
    for (int i = 0; i <= dense; ++i) {
        const double u = ts.front() + step * i;
        const double speed = norm({sx.derivative(u), sy.derivative(u), sz.derivative(u)});
        if (i > 0) s += 0.5 * (speed + prev_speed) * step;
        prev_speed = speed;
        s_knots[i] = s;
        px[i] = sx(u);
        py[i] = sy(u);
        pz[i] = sz(u);
    }
    auto rx = std::make_shared<CubicSpline>(s_knots, px);
    auto ry = std::make_shared<CubicSpline>(s_knots, py);
    auto rz = std::make_shared<CubicSpline>(s_knots, pz);
    return {[rx, ry, rz](double t) { return Vec3d{(*rx)(t), (*ry)(t), (*rz)(t)}; },
            [rx, ry, rz](double t) {
                return normalized({rx->derivative(t), ry->derivative(t), rz->derivative(t)});
            },
            true};
}

Vec3d rear_track_rhs(const Directrix& d, double t, const Vec3d& x) {
    const Vec3d rod = d.point(t) - x;
    if (std::abs(norm(rod) - 1.0) > 1e-6) {
        throw std::domain_error("rear-track state violates the unit rod constraint");
    }
    return dot(rod, d.tangent(t)) * rod;
}

RearTrackResult integrate_rear_track(const Directrix& d, const Vec3d& x0, double t0, double t1,
                                     double h) {
    if (!(h > 0.0)) throw std::invalid_argument("step size must be positive");
    if (std::abs(distance(d.point(t0), x0) - 1.0) > 1e-9) {
        throw std::invalid_argument("initial rear point must sit at rod distance 1");
    }
    const auto rhs = [&d](double t, const Vec3d& x) {
        const Vec3d rod = d.point(t) - x;
        return dot(rod, d.tangent(t)) * rod;
    };

    RearTrackResult out;
    const double span = t1 - t0;
    const long long steps = std::max<long long>(1, static_cast<long long>(std::ceil(std::abs(span) / h)));
    const double dt = span / static_cast<double>(steps);

    Vec3d x = x0;
    double t = t0;
    out.states.push_back({t, x});
    double prev_speed = dot(d.point(t) - x, d.tangent(t));
    for (long long i = 0; i < steps; ++i) {
        const Vec3d k1 = rhs(t, x);
        const Vec3d k2 = rhs(t + 0.5 * dt, x + (0.5 * dt) * k1);
        const Vec3d k3 = rhs(t + 0.5 * dt, x + (0.5 * dt) * k2);
        const Vec3d k4 = rhs(t + dt, x + dt * k3);
        x = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = t0 + dt * static_cast<double>(i + 1);

        const Vec3d c = d.point(t);
        const Vec3d rod = x - c;
        const double len = norm(rod);
        out.max_rod_drift = std::max(out.max_rod_drift, std::abs(len - 1.0));
        const Vec3d projected = c + rod / len;
        out.max_renorm_displacement =
            std::max(out.max_renorm_displacement, distance(projected, x));
        x = projected;

        const double speed = dot(c - x, d.tangent(t));
        if (speed * prev_speed < 0.0) out.crossed_cusp = true;
        prev_speed = speed;
        out.states.push_back({t, x});
    }
    return out;
}

double residual_of_closed_form(const TractrixParams& p, Interval window, int n) {
    if (n < 1) throw std::invalid_argument("residual check needs at least one sample");
    double worst = 0.0;
    const double step = (n > 1) ? window.length() / (n - 1) : 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = window.lo + step * i;
        const CurveSample s = eval_curve(p, t);
        const Vec3d rod = directrix_point(p, t) - s.f;
        const Vec3d expected = dot(rod, directrix_tangent(p.R, t)) * rod;
        worst = std::max(worst, distance(s.d1, expected));
    }
    return worst;
}

}  // namespace ctrx
