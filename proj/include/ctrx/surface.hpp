#pragma once

#include <vector>

#include "ctrx/eval.hpp"
#include "ctrx/params.hpp"
#include "ctrx/vec3.hpp"

namespace ctrx {

// One parametric patch of a circular pseudosphere: the sweep of the
// one-parameter family of tractrices sharing the directrix circle of
// radius R. `branch` selects the component c1 = +-cosh(alpha) in the
// subcritical regime and is ignored otherwise. The stored ranges drive
// meshing and sampling; pointwise evaluators accept any valid (t, alpha).
struct SurfacePatch {
    double R{};
    Regime regime{};
    int branch = +1;
    double lambda{};
    Interval t_range{}, alpha_range{};
};

SurfacePatch make_surface(double R, int branch = +1);
SurfacePatch make_surface(double R, int branch, Interval t_range, Interval alpha_range);

// Position of the swept surface at (t, alpha), any scalar type.
template <class T>
Vec3<T> surface_position(const SurfacePatch& s, const T& t, const T& alpha) {
    T c1, c2;
    sweep_constants(s.regime, s.branch, alpha, c1, c2);
    return position_formula(s.regime, s.R, s.lambda, c1, c2, t);
}

// xi2 of the sweeping tractrix through (t, alpha); vanishes on cuspidal edges.
double surface_xi2(const SurfacePatch& s, double t, double alpha);

struct SurfaceFrame {
    Vec3d f, ft, fa;  // position and first partials
};
SurfaceFrame surface_point(const SurfacePatch& s, double t, double alpha);

struct SurfaceJet2 {
    Vec3d f, ft, fa, ftt, fta, faa;
};
SurfaceJet2 surface_jet2(const SurfacePatch& s, double t, double alpha);

// First fundamental form in (t, alpha) from the closed-form metric. F is
// identically zero in all three regimes.
struct MetricTensor {
    double E{}, F{}, G{};
};
MetricTensor metric_analytic(const SurfacePatch& s, double t, double alpha);

// Closed-form radius of the coordinate circle t = const.
double coordinate_circle_radius(const SurfacePatch& s, double t);

// Numeric probe of the same circle: curvature and torsion of the alpha-curve
// sampled along its range. A true circle gives zero spread and zero torsion.
struct CoordinateCircleCheck {
    double radius_mean{}, radius_spread{}, torsion_max{};
};
CoordinateCircleCheck coordinate_circle_check(const SurfacePatch& s, double t, int samples = 32);

// Intrinsic Gauss curvature from the analytic metric (orthogonal
// coordinates), using exact metric derivatives. Throws on cuspidal edges
// where E = 0.
double gauss_curvature(const SurfacePatch& s, double t, double alpha);

// Off-diagonal first- and second-fundamental-form coefficients; both vanish
// exactly when the coordinate lines are lines of curvature.
struct CurvatureLineProbe {
    double first_form_F{}, second_form_M{};
};
CurvatureLineProbe curvature_line_probe(const SurfacePatch& s, double t, double alpha);

// |f + f_t/xi2 - c(t)|, the surface version of the tracing relation.
double surface_tracing_residual(const SurfacePatch& s, double t, double alpha);

// Cuspidal-edge parameters of the sweep inside the window.
std::vector<double> surface_singular_parameters(const SurfacePatch& s, Interval window);

// Expected E/G at parameter t: sinh^2(lambda t), t^2 or sin^2(lambda t);
// independent of alpha in every regime.
double isothermic_ratio(const SurfacePatch& s, double t);

}  // namespace ctrx
