#pragma once

#include "chiralkit/current/forms.hpp"
#include "chiralkit/geometry.hpp"

namespace chiralkit::current {

/// Integral of sgn(x - y) u(y) dy.
Rational signed_mass(const LineFn& u, const Rational& x);

/// G(omega)(x) = 1/4 int (sgn(x+ - y+) + sgn(x- - y-)) rho(y) dy, exact.
Rational causal_propagator_minkowski(const TwoForm& omega, const geometry::Point& x);

struct CylinderPropagatorValue {
  Rational value;
  Integer window_lo;  ///< translates n in [window_lo, window_hi] were summed
  Integer window_hi;
};

/// Method of images: sum of the plane propagator over the translates
/// (+n, -n) of omega. The window is the smallest one outside of which every
/// translate cancels; `enlarge` widens it on both sides.
CylinderPropagatorValue causal_propagator_cylinder(const TwoForm& omega, const geometry::Point& x,
                                                   long enlarge = 0);

/// tau(alpha, beta) = int d(alpha) G(d(beta)) on the plane, by one Gauss-Legendre
/// panel per cell between knots. Both forms must be separable with continuous factors.
double tau_via_propagator(const OneForm& alpha, const OneForm& beta);

}  // namespace chiralkit::current
