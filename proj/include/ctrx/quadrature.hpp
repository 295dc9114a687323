#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ctrx/params.hpp"
#include "ctrx/surface.hpp"

namespace ctrx {

struct QuadratureResult {
    double value{};
    double error_estimate{};  // rule error plus any certified truncation remainder
    long long evaluations{};
    bool converged{};
    std::string truncation;  // description of the domain cut, empty if none
};

// Adaptive integration over the union of panels [edges[i], edges[i+1]].
// Panels are bisected worst-error-first (deterministic order) until the
// summed error estimate meets max(abs_tol, rel_tol*|value|) or the
// evaluation budget runs out.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    std::span<const double> edges, double abs_tol,
                                    double rel_tol = 0.0, long long max_evals = 50'000'000);

// Iterated 2D integration: an adaptive outer rule in t whose integrand is an
// adaptive inner integral over alpha. inner_rel_tol bounds the relative error
// allowed in each inner integral; its contribution is folded into the
// reported error estimate via the |f| mass.
QuadratureResult integrate_adaptive_2d(const std::function<double(double, double)>& f,
                                       std::span<const double> t_edges,
                                       std::span<const double> a_edges, double abs_tol,
                                       double inner_rel_tol, long long max_evals = 200'000'000);

// Panel ladders for domains whose structure lives near the origin:
// {0, s, 2s, 4s, ..., hi} and its symmetric counterpart about 0.
std::vector<double> geometric_edges(double scale, double hi);
std::vector<double> symmetric_geometric_edges(double scale, double hi);

// Arc length of the curve over a window (integral of |xi2|), with panels
// pre-split at the singular parameters inside the window.
QuadratureResult arc_length(const TractrixParams& p, Interval window, double tol = 1e-10);

// Complete surface area. Supercritical / critical: the full surface (target
// 4*pi); subcritical: one unit of the patch's component (closed form
// 4(atan sqrt((1+R)/(1-R)) - atan sqrt((1-R)/(1+R)))). Infinite directions
// are cut at certified tail bounds scaled by tail_scale (tests halve it to
// confirm the reported error covers the truncation).
QuadratureResult surface_area(const SurfacePatch& s, double tol, double tail_scale = 1.0);

// Volume enclosed by the immersed surface, counted with multiplicity, as the
// absolute flux (1/3)|integral of f . (f_t x f_a)| over the closed surface.
// Supercritical / critical target 2*pi/3; the subcritical value (one unit)
// is reported with no paper target.
QuadratureResult enclosed_volume(const SurfacePatch& s, double tol, double tail_scale = 1.0);

// surface_area across several radii R >= 1 (R = 1 via the critical patch).
std::vector<std::pair<double, QuadratureResult>> area_r_independence(
    std::span<const double> radii, double tol);

// Closed-form unit area of a subcritical component, for comparison.
double subcritical_unit_area_closed_form(double R);

}  // namespace ctrx
