#include "chiralkit/current/forms.hpp"

#include "chiralkit/errors.hpp"

namespace chiralkit::current {

namespace {

SlotFn integrate_terms(const std::vector<SeparableTerm>& sep, const std::vector<DiagonalTerm>& diag, Sign which,
                       Obj2 ambient) {
  const bool plus = which == Sign::Plus;
  LineFn line;
  for (const auto& t : sep) {
    const LineFn& kept = plus ? t.plus : t.minus;
    const LineFn& fiber = plus ? t.minus : t.plus;
    line = line + fiber.integral() * kept;
  }
  if (ambient == Obj2::Minkowski) {
    for (const auto& t : diag) {
      const auto* phi = std::get_if<LineFn>(&t.phi);
      if (!phi) throw PreconditionViolation("periodic factor has unbounded support on the plane");
      line = line + t.rho.integral() * *phi;
    }
    return line;
  }
  CircleFn circle = CircleFn::fold(line);
  for (const auto& t : diag) {
    const auto* phi = std::get_if<CircleFn>(&t.phi);
    if (!phi) throw PreconditionViolation("diagonal term on the cylinder needs a periodic factor");
    circle = circle + t.rho.integral() * *phi;
  }
  return circle;
}

void require_continuous(const LineFn& f) {
  if (!f.is_continuous()) throw PreconditionViolation("exterior derivative needs continuous factors");
}

}  // namespace

SlotFn fiber_integrate(const OneForm& alpha, Sign which, Obj2 ambient) {
  if (which == Sign::Plus) return integrate_terms(alpha.dminus, alpha.dminus_diagonal, which, ambient);
  return integrate_terms(alpha.dplus, alpha.dplus_diagonal, which, ambient);
}

Observable fiber_integrate(const OneForm& alpha, Obj2 ambient) {
  return {ambient, fiber_integrate(alpha, Sign::Plus, ambient), fiber_integrate(alpha, Sign::Minus, ambient)};
}

TwoForm exterior_derivative(const OneForm& alpha) {
  if (!alpha.is_separable()) throw PreconditionViolation("exterior derivative needs a separable form");
  TwoForm out;
  for (const auto& t : alpha.dminus) {
    require_continuous(t.plus);
    require_continuous(t.minus);
    out.terms.push_back({Rational(-1) * t.plus.piecewise_derivative(), t.minus});
  }
  for (const auto& t : alpha.dplus) {
    require_continuous(t.plus);
    require_continuous(t.minus);
    out.terms.push_back({t.plus, t.minus.piecewise_derivative()});
  }
  return out;
}

OneForm separable_presentation(const Observable& o, const LineFn& rho) {
  if (o.ambient() != Obj2::Minkowski) throw PreconditionViolation("separable presentation lives on the plane");
  if (rho.integral() != 1) throw PreconditionViolation("the fiber density must have integral 1");
  OneForm alpha;
  const auto& plus = std::get<LineFn>(o.plus());
  const auto& minus = std::get<LineFn>(o.minus());
  if (!plus.is_zero()) alpha.dminus.push_back({plus, rho});
  if (!minus.is_zero()) alpha.dplus.push_back({rho, minus});
  return alpha;
}

Observable cohomology_basis_zeta(const LineFn& rho, Sign sign) {
  if (rho.integral() != 1) {
    throw PreconditionViolation("zeta needs a density of total integral 1, got " + to_string(rho.integral()));
  }
  OneForm zeta;
  auto& slot = sign == Sign::Plus ? zeta.dplus_diagonal : zeta.dminus_diagonal;
  slot.push_back({rho, CircleFn(Rational(1))});
  return fiber_integrate(zeta, Obj2::Cylinder);
}

}  // namespace chiralkit::current
