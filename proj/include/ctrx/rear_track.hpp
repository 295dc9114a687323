#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ctrx/params.hpp"
#include "ctrx/vec3.hpp"

namespace ctrx {

// Front-track curve for the bicycle model: point and unit tangent at
// parameter t. With arc_length set, t measures length along the curve and
// the rear-track ODE below is the exact unit-rod model.
struct Directrix {
    std::function<Vec3d(double)> point;
    std::function<Vec3d(double)> tangent;
    bool arc_length = true;
};

Directrix circle_directrix(double R);
// The x2-axis traversed at unit speed; front track of the linear tractrix.
Directrix line_directrix();
// Builds a directrix from CSV rows "t,x,y,z" via natural cubic splines,
// reparametrized by accumulated arc length so the rod model applies.
Directrix load_polyline_directrix(const std::string& csv_path);

struct RearTrackState {
    double t{};
    Vec3d x{};
};

// Right side of dx/dt = <c - x, c'>(c - x): the rear point moves along the
// unit rod with the speed of the rod's projection onto the front velocity.
// Throws if |c(t) - x| strays from 1 by more than 1e-6.
Vec3d rear_track_rhs(const Directrix& d, double t, const Vec3d& x);

struct RearTrackResult {
    std::vector<RearTrackState> states;
    double max_renorm_displacement{};  // per-step rod projection distance
    double max_rod_drift{};            // worst | |c-x| - 1 | before projection
    bool crossed_cusp{};               // rod speed changed sign along the run
};

// Fixed-step RK4 with per-step projection of the rear point back onto the
// unit sphere around the front point. x0 must satisfy |c(t0) - x0| = 1
// within 1e-9.
RearTrackResult integrate_rear_track(const Directrix& d, const Vec3d& x0, double t0, double t1,
                                     double h);

// Max over n window samples of |f' - <c - f, c'>(c - f)| for the closed-form
// curve; zero exactly when the closed form solves the rear-track ODE.
double residual_of_closed_form(const TractrixParams& p, Interval window, int n);

}  // namespace ctrx
