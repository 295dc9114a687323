#pragma once

#include <optional>
#include <string>

namespace ctrx {

// The directrix radius R splits the family into three regimes with distinct
// closed forms and qualitative behavior.
enum class Regime { Supercritical, Critical, Subcritical };

Regime regime_of(double R);
const char* regime_name(Regime r);

struct Interval {
    double lo{}, hi{};
    double length() const { return hi - lo; }
    bool contains(double t) const { return t >= lo && t <= hi; }
};

// Family constants (c1, c2) together with the derived rate lambda.
//
// Constraints per regime:
//   Supercritical (R > 1):  c1^2 + c2^2 = 1,  lambda = sqrt(R^2-1)/R
//   Critical     (R = 1):   4(c1 - 1) = c2^2, lambda unused (0)
//   Subcritical  (R < 1):   c1^2 - c2^2 = 1,  lambda = sqrt(1-R^2)/R
struct TractrixParams {
    double R{};
    double c1{}, c2{};
    double lambda{};
    Regime regime{};
};

// Builds params from a point on the regime's constraint curve:
//   Supercritical: c1 = cos(selector),        c2 = sin(selector)
//   Critical:      c1 = 1 + selector^2,       c2 = 2*selector
//   Subcritical:   c1 = branch*cosh(selector), c2 = sinh(selector)
// branch is only meaningful in the subcritical regime.
TractrixParams make_params(double R, double selector, int branch = +1);

// Builds params from explicit constants; rejects pairs violating the
// regime constraint (relative residual above 1e-12).
TractrixParams params_from_constants(double R, double c1, double c2);

// Relative residual of the regime constraint.
double constraint_residual(const TractrixParams& p);

struct Rational {
    long long num{}, den{};
};

// Best small-denominator rational near x via continued fractions, or nullopt
// if none matches within tol. A suggestion only; nothing downstream treats
// it as proof of rationality.
std::optional<Rational> suggest_rational(double x, long long max_den = 4096,
                                         double tol = 1e-12);

}  // namespace ctrx
