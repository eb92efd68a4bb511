#include "chiralkit/current/propagator.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <optional>

namespace chiralkit::current {

namespace {

Rational mass_below(const LineFn& u, const Rational& x) {
  Rational total = 0;
  const auto& k = u.knots();
  for (std::size_t i = 0; i + 1 < k.size(); ++i) {
    if (k[i] >= x) break;
    total += u.pieces()[i].integrate(k[i], std::min(k[i + 1], x));
  }
  return total;
}

// Every integrand below is a polynomial between consecutive cut points, of
// degree well under 29, so a single 15-point Gauss-Legendre panel per cell is
// exact up to rounding.
double quad(const std::function<double(double)>& f, double a, double b) {
  if (!(a < b)) return 0.0;
  return boost::math::quadrature::gauss<double, 15>::integrate(f, a, b);
}

/// Integral of f over the support of u, split at the knots of u and at the extra cut points.
double quad_over(const LineFn& u, std::vector<double> cuts, const std::function<double(double)>& f) {
  if (u.is_zero()) return 0.0;
  for (const auto& k : u.knots()) cuts.push_back(to_double(k));
  const double lo = to_double(u.knots().front());
  const double hi = to_double(u.knots().back());
  std::erase_if(cuts, [&](double c) { return c < lo || c > hi; });
  std::sort(cuts.begin(), cuts.end());
  double total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += quad(f, cuts[i], cuts[i + 1]);
  return total;
}

double numeric_mass(const LineFn& u) {
  return quad_over(u, {}, [&](double y) { return u.eval(y); });
}

double numeric_signed_mass(const LineFn& u, double x) {
  return quad_over(u, {x}, [&](double y) { return (y < x ? 1.0 : y > x ? -1.0 : 0.0) * u.eval(y); });
}

/// int p(x) S_u(x) dx
double numeric_pairing(const LineFn& p, const LineFn& u) {
  std::vector<double> cuts;
  for (const auto& k : u.knots()) cuts.push_back(to_double(k));
  return quad_over(p, cuts, [&](double x) { return p.eval(x) * numeric_signed_mass(u, x); });
}

}  // namespace

Rational signed_mass(const LineFn& u, const Rational& x) {
  const Rational below = mass_below(u, x);
  return below - (u.integral() - below);
}

Rational causal_propagator_minkowski(const TwoForm& omega, const geometry::Point& x) {
  Rational total = 0;
  for (const auto& t : omega.terms) {
    total += signed_mass(t.plus, x.plus) * t.minus.integral() + t.plus.integral() * signed_mass(t.minus, x.minus);
  }
  return total / 4;
}

CylinderPropagatorValue causal_propagator_cylinder(const TwoForm& omega, const geometry::Point& x, long enlarge) {
  std::optional<Rational> lo, hi;
  for (const auto& t : omega.terms) {
    const auto su = t.plus.support();
    const auto sv = t.minus.support();
    if (!su || !sv) continue;
    const Rational a = std::min<Rational>(x.plus - su->second, sv->first - x.minus);
    const Rational b = std::max<Rational>(x.plus - su->first, sv->second - x.minus);
    lo = lo ? std::min(*lo, a) : a;
    hi = hi ? std::max(*hi, b) : b;
  }
  CylinderPropagatorValue out{Rational(0), Integer(0), Integer(0)};
  if (!lo) return out;
  out.window_lo = floor_of(*lo) - enlarge;
  out.window_hi = ceil_of(*hi) + enlarge;
  for (Integer n = out.window_lo; n <= out.window_hi; ++n) {
    const Rational shift(n);
    out.value += causal_propagator_minkowski(omega, {x.plus - shift, x.minus + shift});
  }
  return out;
}

double tau_via_propagator(const OneForm& alpha, const OneForm& beta) {
  const TwoForm da = exterior_derivative(alpha);
  const TwoForm db = exterior_derivative(beta);
  double total = 0;
  for (const auto& a : da.terms) {
    const double pa = numeric_mass(a.plus);
    const double qa = numeric_mass(a.minus);
    for (const auto& b : db.terms) {
      total += numeric_mass(b.minus) * numeric_pairing(a.plus, b.plus) * qa +
               numeric_mass(b.plus) * pa * numeric_pairing(a.minus, b.minus);
    }
  }
  return total / 4;
}

}  // namespace chiralkit::current
