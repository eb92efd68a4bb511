#pragma once

// Brute-force reference computations used by the tests. None of these call
// into the predicates they are compared against.

#include <cmath>
#include <functional>
#include <vector>

#include "chiralkit/geometry.hpp"
#include "chiralkit/rational.hpp"

namespace oracle {

using chiralkit::Rational;
using chiralkit::geometry::DoubleCone;
using chiralkit::geometry::Interval;
using chiralkit::geometry::Point;

/// Sample points of a bounded open interval: both ends nudged inward by eps,
/// plus the three quartiles.
inline std::vector<Rational> samples(const Interval& i, const Rational& eps = Rational(1, 1000)) {
  const Rational lo = i.lo().value();
  const Rational hi = i.hi().value();
  const Rational w = hi - lo;
  return {Rational(lo + eps), Rational(lo + w / 4), Rational(lo + w / 2), Rational(lo + 3 * w / 4), Rational(hi - eps)};
}

/// q lies in the closed future or past of p.
inline bool causally_related(const Point& p, const Point& q) {
  const bool fut = q.plus >= p.plus && q.minus >= p.minus;
  const bool past = q.plus <= p.plus && q.minus <= p.minus;
  return fut || past;
}

/// Disjointness by checking every pair of grid points. Exact for cones whose
/// endpoints lie on a grid coarser than 2 * eps.
inline bool grid_disjoint(const DoubleCone& a, const DoubleCone& b) {
  const auto ap = samples(a.plus), am = samples(a.minus);
  const auto bp = samples(b.plus), bm = samples(b.minus);
  for (const auto& x : ap)
    for (const auto& y : am)
      for (const auto& u : bp)
        for (const auto& v : bm)
          if (causally_related({x, y}, {u, v})) return false;
  return true;
}

/// Cylinder disjointness by enumerating deck translates n in [-range, range].
inline bool enumerated_cylinder_disjoint(const DoubleCone& a, const DoubleCone& b, long range = 10) {
  for (long n = -range; n <= range; ++n) {
    if (!grid_disjoint(a, b.deck(Rational(n)))) return false;
  }
  return true;
}

/// -1/2 int phi dpsi as a Riemann-Stieltjes sum with step h over [lo, hi].
inline double stieltjes_tau(const std::function<double(double)>& phi, const std::function<double(double)>& psi,
                            double lo, double hi, double h = 1e-4) {
  const long n = std::lround((hi - lo) / h);
  double acc = 0.0;
  for (long k = 0; k < n; ++k) {
    const double a = lo + h * static_cast<double>(k);
    const double m = a + h / 2;
    acc += phi(m) * (psi(a + h) - psi(a));
  }
  return -0.5 * acc;
}

/// Midpoint rule for 1/4 int (sgn(x+ - y+) + sgn(x- - y-)) rho(y) dy over the
/// box [lo, hi]^2 with n x n cells, in exact arithmetic.
inline Rational propagator_midpoint(const std::function<Rational(const Rational&, const Rational&)>& rho,
                                    const Point& x, const Rational& lo, const Rational& hi, long n) {
  const Rational h = (hi - lo) / n;
  auto sgn_of = [](const Rational& v) { return Rational(sgn(v)); };
  Rational acc = 0;
  for (long i = 0; i < n; ++i) {
    const Rational yp = lo + h * (Rational(2 * i + 1, 2));
    for (long j = 0; j < n; ++j) {
      const Rational ym = lo + h * (Rational(2 * j + 1, 2));
      acc += (sgn_of(x.plus - yp) + sgn_of(x.minus - ym)) * rho(yp, ym);
    }
  }
  return acc * h * h / 4;
}

}  // namespace oracle
