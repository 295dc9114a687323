#pragma once

#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "ctrx/params.hpp"
#include "ctrx/vec3.hpp"

namespace ctrx {

// Curve state at parameter t: xi triple, position, the first three
// derivatives with respect to t, and the speed |f'| (= |xi2|).
struct CurveSample {
    double t{};
    Vec3d xi{};
    Vec3d f{};
    Vec3d d1{}, d2{}, d3{};
    double speed{};
};

Vec3d eval_xi(const TractrixParams& p, double t);
CurveSample eval_curve(const TractrixParams& p, double t);

// Point of the directrix circle C at arc length t: (R cos t/R, R sin t/R, 0).
Vec3d directrix_point(double R, double t);
Vec3d directrix_point(const TractrixParams& p, double t);

// Unit tangent of C at arc length t.
Vec3d directrix_tangent(double R, double t);

// |f + f'/xi2 - c(t)|; zero exactly when the unit tangent segments of the
// curve end on the directrix. Throws at singular points (|xi2| < 1e-12).
double tracing_residual(const TractrixParams& p, double t);

// Parameters in `window` where the speed vanishes: {0} for R >= 1,
// {n*pi/lambda} for R < 1.
std::vector<double> singular_parameters(const TractrixParams& p, Interval window);

// What the curve approaches as t -> +-inf, by regime.
struct AsymptoticCircle {
    double radius;  // sqrt(R^2 - 1)
    double R;
    double lambda;
    // The two arc-length-matched parametrizations of C_inf that the curve
    // approaches for t -> +inf and t -> -inf respectively.
    Vec3d plus(double t) const;
    Vec3d minus(double t) const;
    Vec3d plus_derivative(double t) const;
    Vec3d minus_derivative(double t) const;
};
struct AsymptoticPoint {
    Vec3d p;  // the origin
};
struct AsymptoticPointPair {
    Vec3d lower, upper;  // (0, 0, -+sqrt(1 - R^2))
};
using AsymptoticTarget = std::variant<AsymptoticCircle, AsymptoticPoint, AsymptoticPointPair>;

AsymptoticTarget asymptotic_target(const TractrixParams& p);

struct AsymptoticGap {
    double gap;    // distance to the comparison object
    double bound;  // 2 e^(-lambda|t|) (R > 1) or 2/|t| (R = 1)
};

// Supercritical and critical regimes only; the subcritical regime has no
// decay bound (the curve is periodic).
AsymptoticGap asymptotic_bound_check(const TractrixParams& p, double t);

// Arc length of one unit between consecutive cusps (subcritical only):
// sign(c1) * ln|(c1 + R)/(c1 - R)|.
double unit_length(const TractrixParams& p);

struct PeriodData {
    double period{};  // parameter period T = 2*pi/lambda
    double phi{};     // rotation angle per period, 2*pi/sqrt(1 - R^2)
    bool closed{};
    std::optional<long long> petals;
    std::optional<long long> windings;
};

// Periodicity data for the subcritical regime. Closedness is asserted only
// when the caller supplies nu = sqrt(1 - R^2) as an exact rational; floats
// cannot decide rationality.
PeriodData period_data(const TractrixParams& p, std::optional<Rational> nu = {});

struct LimitSample {
    double R{};
    Vec3d shifted{};  // (f1 - R, f2, f3)
    Vec3d limit{};    // (-c1 sech t, t - tanh t, c2 sech t)
    double gap{};
};

// Shifted supercritical curves against the linear tractrix they converge to
// as R grows. R_sequence must be strictly increasing with all entries > 1.
std::vector<LimitSample> linear_tractrix_limit(double selector, double t,
                                               std::span<const double> R_sequence);

}  // namespace ctrx
