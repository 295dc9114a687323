#include "ctrx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "ctrx/tractrix.hpp"

namespace ctrx {

namespace {

constexpr double kPi = std::numbers::pi;

struct Rule {
    std::vector<double> nodes, weights;  // on [-1, 1]
};

// Gauss-Legendre nodes by Newton iteration on P_n; no tabulated constants.
Rule gauss_legendre(int n) {
    Rule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int k = 0; k < n; ++k) {
        double x = std::cos(kPi * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[k] = x;
        r.weights[k] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const Rule& coarse_rule() {
    static const Rule r = gauss_legendre(7);
    return r;
}
const Rule& fine_rule() {
    static const Rule r = gauss_legendre(15);
    return r;
}

struct Panel {
    double a{}, b{};
    double value{}, abs_value{}, error{};
    long long id{};
};

// Larger error first; insertion order breaks ties so refinement is
// deterministic.
struct PanelLess {
    bool operator()(const Panel& l, const Panel& r) const {
        if (l.error != r.error) return l.error < r.error;
        return l.id > r.id;
    }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, long long id,
                     long long& evals) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const Rule& fr = fine_rule();
    const Rule& cr = coarse_rule();
    double fine = 0.0, mass = 0.0, coarse = 0.0;
    for (std::size_t i = 0; i < fr.nodes.size(); ++i) {
        const double v = f(mid + half * fr.nodes[i]);
        fine += fr.weights[i] * v;
        mass += fr.weights[i] * std::abs(v);
    }
    for (std::size_t i = 0; i < cr.nodes.size(); ++i) {
        coarse += cr.weights[i] * f(mid + half * cr.nodes[i]);
    }
    evals += static_cast<long long>(fr.nodes.size() + cr.nodes.size());
    Panel p;
    p.a = a;
    p.b = b;
    p.id = id;
    p.value = fine * half;
    p.abs_value = mass * half;
    p.error = std::max(std::abs(fine - coarse) * half,
                       25.0 * std::numeric_limits<double>::epsilon() * p.abs_value);
    return p;
}

struct AdaptiveOutcome {
    double value{}, abs_value{}, error{};
    long long evals{};
    bool converged{};
};

AdaptiveOutcome run_adaptive(const std::function<double(double)>& f,
                             std::span<const double> edges, double abs_tol, double rel_tol,
                             long long max_evals) {
    AdaptiveOutcome out;
    std::priority_queue<Panel, std::vector<Panel>, PanelLess> queue;
    long long next_id = 0;
    double total = 0.0, total_abs = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        if (!(edges[i] < edges[i + 1])) continue;
        const Panel p = evaluate_panel(f, edges[i], edges[i + 1], next_id++, out.evals);
        total += p.value;
        total_abs += p.abs_value;
        total_err += p.error;
        queue.push(p);
    }
    const auto goal = [&] { return std::max(abs_tol, rel_tol * std::abs(total)); };
    while (!queue.empty() && total_err > goal() && out.evals < max_evals) {
        const Panel worst = queue.top();
        const double width_floor =
            1e-14 * std::max({1.0, std::abs(worst.a), std::abs(worst.b)});
        if (worst.b - worst.a <= width_floor) break;  // cannot refine further
        queue.pop();
        total -= worst.value;
        total_abs -= worst.abs_value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        for (const auto& [lo, hi] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
            const Panel p = evaluate_panel(f, lo, hi, next_id++, out.evals);
            total += p.value;
            total_abs += p.abs_value;
            total_err += p.error;
            queue.push(p);
        }
    }
    out.value = total;
    out.abs_value = total_abs;
    out.error = total_err;
    out.converged = total_err <= goal();
    return out;
}

std::string format_truncation(const char* axis, double cut, double remainder) {
    std::ostringstream os;
    os << axis << " cut at " << cut << " (remainder bound " << remainder << ")";
    return os.str();
}

// Solves bound(x) <= eps for a decreasing bound by doubling then bisecting.
template <class Fn>
double solve_cut(Fn bound, double start, double eps) {
    double hi = start;
    for (int i = 0; i < 200 && bound(hi) > eps; ++i) hi *= 2.0;
    double lo = hi * 0.5;
    if (bound(lo) <= eps) return lo;  // keep panels modest
    for (int i = 0; i < 60; ++i) {
        const double mid = 0.5 * (lo + hi);
        (bound(mid) <= eps ? hi : lo) = mid;
    }
    return hi;
}

// --- certified tail bounds -------------------------------------------------
//
// Supercritical area, both halves, beyond |t| > T:
//   2*Int_T^inf Int_0^2pi (R^2-1) sinh(lt) / (cos a + R cosh(lt))^2
//     <= 4pi (R^2-1) / (l R (R cosh(lT) - 1)).
double supercritical_area_tail(double R, double lambda, double T) {
    const double den = R * std::cosh(lambda * T) - 1.0;
    return 4.0 * kPi * (R * R - 1.0) / (lambda * R * den);
}

// Critical area beyond |t| > T (exact: the alpha integral is
// pi/2 (1+t^2)^(-3/2)): 4pi/sqrt(1+T^2).
double critical_area_tail_t(double T) { return 4.0 * kPi / std::sqrt(1.0 + T * T); }

// Critical area beyond |alpha| > A for |t| <= T, via 1/(s+a^2)^2 <= 1/a^4.
double critical_area_tail_alpha(double T, double A) { return 8.0 * T * T / (3.0 * A * A * A); }

// Subcritical one-component unit area beyond |alpha| > A; the inner
// t-integral is exactly 2(1-R^2)/(l (cosh^2 a - R^2)).
double subcritical_area_tail_alpha(double R, double lambda, double A) {
    const double ch = std::cosh(A);
    const double slack = 1.0 - R * R / (ch * ch);
    return 8.0 * (1.0 - R * R) / lambda * std::exp(-2.0 * A) / slack;
}

double flux_integrand(const SurfacePatch& s, double t, double a) {
    const SurfaceFrame fr = surface_point(s, t, a);
    return triple(fr.f, fr.ft, fr.fa);
}

double area_integrand(const SurfacePatch& s, double t, double a) {
    const MetricTensor m = metric_analytic(s, t, a);
    return std::sqrt(m.E * m.G);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> edges, double abs_tol,
                                    double rel_tol, long long max_evals) {
    const AdaptiveOutcome o = run_adaptive(f, edges, abs_tol, rel_tol, max_evals);
    return {o.value, o.error, o.evals, o.converged, {}};
}

QuadratureResult integrate_adaptive_2d(const std::function<double(double, double)>& f,
                                       std::span<const double> t_edges,
                                       std::span<const double> a_edges, double abs_tol,
                                       double inner_rel_tol, long long max_evals) {
    double t_length = 0.0;
    for (std::size_t i = 0; i + 1 < t_edges.size(); ++i) {
        t_length += std::max(0.0, t_edges[i + 1] - t_edges[i]);
    }
    if (t_length <= 0.0) return {0.0, 0.0, 0, true, {}};

    // Error budget split: half to the outer rule, 5% carried by the inner
    // absolute floor, the rest covered by inner_rel_tol against the |f| mass.
    const double inner_abs = 0.05 * abs_tol / t_length;
    long long evals = 0;
    bool inner_ok = true;
    const std::vector<double> a_copy(a_edges.begin(), a_edges.end());
    const auto g = [&](double t) {
        const AdaptiveOutcome inner = run_adaptive([&](double a) { return f(t, a); }, a_copy,
                                                   inner_abs, inner_rel_tol,
                                                   std::max<long long>(1, max_evals - evals));
        evals += inner.evals;
        inner_ok = inner_ok && inner.converged;
        return inner.value;
    };
    const AdaptiveOutcome outer =
        run_adaptive(g, t_edges, 0.5 * abs_tol, 0.0, max_evals);

    QuadratureResult r;
    r.value = outer.value;
    r.error_estimate = outer.error + 0.05 * abs_tol + inner_rel_tol * outer.abs_value;
    r.evaluations = evals;
    r.converged = outer.converged && inner_ok && r.error_estimate <= abs_tol;
    return r;
}

std::vector<double> geometric_edges(double scale, double hi) {
    std::vector<double> edges{0.0};
    if (!(hi > 0.0)) return edges;
    double x = std::min(scale, hi);
    while (x < hi) {
        edges.push_back(x);
        x *= 2.0;
    }
    edges.push_back(hi);
    return edges;
}

std::vector<double> symmetric_geometric_edges(double scale, double hi) {
    const std::vector<double> half = geometric_edges(scale, hi);
    std::vector<double> edges;
    edges.reserve(2 * half.size());
    for (auto it = half.rbegin(); it != half.rend(); ++it) edges.push_back(-*it);
    for (std::size_t i = 1; i < half.size(); ++i) edges.push_back(half[i]);
    return edges;
}

QuadratureResult arc_length(const TractrixParams& p, Interval window, double tol) {
    if (window.lo > window.hi) throw std::invalid_argument("arc length window must have lo <= hi");
    std::vector<double> edges{window.lo};
    for (const double ts : singular_parameters(p, window)) {
        if (ts > edges.back() && ts < window.hi) edges.push_back(ts);
    }
    edges.push_back(window.hi);
    const auto speed = [&p](double t) { return std::abs(eval_xi(p, t).y); };
    QuadratureResult r = integrate_adaptive(speed, edges, tol);
    return r;
}

QuadratureResult surface_area(const SurfacePatch& s, double tol, double tail_scale) {
    if (!(tol >= 1e-8)) throw std::invalid_argument("surface area tolerance must be >= 1e-8");
    const auto f = [&s](double t, double a) { return area_integrand(s, t, a); };
    QuadratureResult r;
    switch (s.regime) {
        case Regime::Supercritical: {
            const double eps = tail_scale * 0.25 * tol;
            const double cut = solve_cut(
                [&](double T) { return supercritical_area_tail(s.R, s.lambda, T); },
                2.0 / s.lambda, eps);
            const double tail = supercritical_area_tail(s.R, s.lambda, cut);
            const std::vector<double> te = geometric_edges(1.0 / s.lambda, cut);
            const std::vector<double> ae{0.0, 0.5 * kPi, kPi, 1.5 * kPi, 2.0 * kPi};
            r = integrate_adaptive_2d(f, te, ae, 0.2 * tol, 2e-3 * tol);
            r.value *= 2.0;
            r.error_estimate = 2.0 * r.error_estimate + tail;
            r.truncation = format_truncation("t", cut, tail);
            break;
        }
        case Regime::Critical: {
            const double eps = tail_scale * 0.25 * tol;
            const double cut_t = std::sqrt(std::max(1.0, 16.0 * kPi * kPi / (eps * eps) - 1.0));
            const double tail_t = critical_area_tail_t(cut_t);
            const double cut_a = solve_cut(
                [&](double A) { return critical_area_tail_alpha(cut_t, A); }, 4.0, eps);
            const double tail_a = critical_area_tail_alpha(cut_t, cut_a);
            const std::vector<double> te = geometric_edges(0.5, cut_t);
            const std::vector<double> ae = symmetric_geometric_edges(0.5, cut_a);
            r = integrate_adaptive_2d(f, te, ae, 0.2 * tol, 2e-3 * tol);
            r.value *= 2.0;
            r.error_estimate = 2.0 * r.error_estimate + tail_t + tail_a;
            r.truncation =
                format_truncation("t", cut_t, tail_t) + "; " + format_truncation("alpha", cut_a, tail_a);
            break;
        }
        case Regime::Subcritical: {
            const double eps = tail_scale * 0.25 * tol;
            const double cut_a = solve_cut(
                [&](double A) { return subcritical_area_tail_alpha(s.R, s.lambda, A); }, 4.0,
                eps);
            const double tail = subcritical_area_tail_alpha(s.R, s.lambda, cut_a);
            const double unit = kPi / s.lambda;
            const std::vector<double> te{0.0, 0.25 * unit, 0.5 * unit, 0.75 * unit, unit};
            const std::vector<double> ae = symmetric_geometric_edges(1.0, cut_a);
            r = integrate_adaptive_2d(f, te, ae, 0.5 * tol, 2e-3 * tol);
            r.error_estimate += tail;
            r.truncation = format_truncation("alpha", cut_a, tail);
            break;
        }
    }
    r.converged = r.converged && r.error_estimate <= tol;
    return r;
}

QuadratureResult enclosed_volume(const SurfacePatch& s, double tol, double tail_scale) {
    if (!(tol >= 1e-8)) throw std::invalid_argument("volume tolerance must be >= 1e-8");
    const auto f = [&s](double t, double a) { return flux_integrand(s, t, a); };
    QuadratureResult r;
    switch (s.regime) {
        case Regime::Supercritical: {
            const double eps = tail_scale * 0.25 * tol;
            // |f| <= R + 1 inside the unit tube around C, so the flux tail is
            // controlled by the area tail.
            const double factor = (s.R + 1.0) / 3.0;
            const double cut = solve_cut(
                [&](double T) { return factor * supercritical_area_tail(s.R, s.lambda, T); },
                2.0 / s.lambda, eps);
            const double tail = factor * supercritical_area_tail(s.R, s.lambda, cut);
            const std::vector<double> te = geometric_edges(1.0 / s.lambda, cut);
            const std::vector<double> ae{0.0, 0.5 * kPi, kPi, 1.5 * kPi, 2.0 * kPi};
            r = integrate_adaptive_2d(f, te, ae, 0.75 * tol, 2e-3 * tol);
            r.value = std::abs(2.0 * r.value) / 3.0;
            r.error_estimate = 2.0 * r.error_estimate / 3.0 + tail;
            r.truncation = format_truncation("t", cut, tail);
            break;
        }
        case Regime::Critical: {
            const double eps = tail_scale * 0.25 * tol;
            const double cut_t = std::sqrt(std::max(1.0, 8.0 * kPi / (3.0 * eps) - 1.0));
            const double tail_t = 8.0 * kPi / (3.0 * (1.0 + cut_t * cut_t));
            const auto alpha_tail = [&](double A) {
                return (2.0 / (3.0 * std::sqrt(1.0 + A * A))) *
                       critical_area_tail_alpha(cut_t, A);
            };
            const double cut_a = solve_cut(alpha_tail, 4.0, eps);
            const double tail_a = alpha_tail(cut_a);
            const std::vector<double> te = geometric_edges(0.5, cut_t);
            const std::vector<double> ae = symmetric_geometric_edges(0.5, cut_a);
            r = integrate_adaptive_2d(f, te, ae, 0.75 * tol, 2e-3 * tol);
            r.value = std::abs(2.0 * r.value) / 3.0;
            r.error_estimate = 2.0 * r.error_estimate / 3.0 + tail_t + tail_a;
            r.truncation =
                format_truncation("t", cut_t, tail_t) + "; " + format_truncation("alpha", cut_a, tail_a);
            break;
        }
        case Regime::Subcritical: {
            const double eps = tail_scale * 0.25 * tol;
            const double factor = (s.R + 1.0) / 3.0;
            const auto alpha_tail = [&](double A) {
                return factor * subcritical_area_tail_alpha(s.R, s.lambda, A);
            };
            const double cut_a = solve_cut(alpha_tail, 4.0, eps);
            const double tail = alpha_tail(cut_a);
            const double unit = kPi / s.lambda;
            const std::vector<double> te{0.0, 0.25 * unit, 0.5 * unit, 0.75 * unit, unit};
            const std::vector<double> ae = symmetric_geometric_edges(1.0, cut_a);
            r = integrate_adaptive_2d(f, te, ae, 0.75 * tol, 2e-3 * tol);
            r.value = std::abs(r.value) / 3.0;
            r.error_estimate = r.error_estimate / 3.0 + tail;
            r.truncation = format_truncation("alpha", cut_a, tail) +
                           "; no paper target (single unit, one component)";
            break;
        }
    }
    r.converged = r.converged && r.error_estimate <= tol;
    return r;
}

std::vector<std::pair<double, QuadratureResult>> area_r_independence(
    std::span<const double> radii, double tol) {
    std::vector<std::pair<double, QuadratureResult>> out;
    out.reserve(radii.size());
    for (const double R : radii) {
        if (!(R >= 1.0)) {
            throw std::invalid_argument("area universality applies to R >= 1 only");
        }
        out.emplace_back(R, surface_area(make_surface(R), tol));
    }
    return out;
}

double subcritical_unit_area_closed_form(double R) {
    if (!(R > 0.0 && R < 1.0)) throw std::invalid_argument("closed-form unit area needs 0 < R < 1");
    return 4.0 * (std::atan(std::sqrt((1.0 + R) / (1.0 - R))) -
                  std::atan(std::sqrt((1.0 - R) / (1.0 + R))));
}

}  // namespace ctrx
