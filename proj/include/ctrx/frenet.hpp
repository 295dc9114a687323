#pragma once

#include <utility>
#include <vector>

#include "ctrx/params.hpp"
#include "ctrx/vec3.hpp"

namespace ctrx {

struct FrenetData {
    Vec3d tangent{}, normal{}, binormal{};
    double kappa{};
    double tau{};
    double t{};
};

// Frenet frame, curvature and torsion at a regular point. Throws at
// singular points (|xi2| < 1e-10) and where curvature vanishes.
FrenetData frenet(const TractrixParams& p, double t);

// True exactly for the torsion-free family members: c2 = 0 with c1 = +-1
// (critical regime: c1 = 1 only). Decided from the constants, not from a
// sampled torsion.
bool is_planar(const TractrixParams& p);

// n equally spaced (t, tau) samples over the window, which must stay at
// least 1e-3 away from every singular parameter.
std::vector<std::pair<double, double>> torsion_profile(const TractrixParams& p, Interval window,
                                                       int n);

}  // namespace ctrx
