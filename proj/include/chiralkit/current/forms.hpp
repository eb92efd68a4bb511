#pragma once

#include <vector>

#include "chiralkit/current/observable.hpp"

// Compactly supported forms on the plane in lightcone coordinates, kept in
// separable or diagonal form so that fiber integration stays exact.
namespace chiralkit::current {

/// u(x+) v(x-)
struct SeparableTerm {
  LineFn plus;
  LineFn minus;
};

/// rho(x+ + x-) phi(y), where y is the coordinate that survives fiber
/// integration (x+ for a dx- term, x- for a dx+ term).
struct DiagonalTerm {
  LineFn rho;
  SlotFn phi;
};

/// alpha = a dx- + b dx+. Each coefficient is a finite sum of terms.
struct OneForm {
  std::vector<SeparableTerm> dminus;
  std::vector<SeparableTerm> dplus;
  std::vector<DiagonalTerm> dminus_diagonal;
  std::vector<DiagonalTerm> dplus_diagonal;

  bool is_separable() const { return dminus_diagonal.empty() && dplus_diagonal.empty(); }
};

/// omega = rho dy- ^ dy+ with rho a finite sum of separable terms.
struct TwoForm {
  std::vector<SeparableTerm> terms;
};

/// Integrates out the coordinate opposite to `which`: dx- terms land in the
/// plus slot and dx+ terms in the minus slot. On the cylinder the separable
/// part is folded onto the circle. Throws PreconditionViolation when a term
/// has non-compact support along the fiber or does not fit the ambient.
SlotFn fiber_integrate(const OneForm& alpha, Sign which, Obj2 ambient);
Observable fiber_integrate(const OneForm& alpha, Obj2 ambient);

/// d alpha = (d_- b - d_+ a) dx- ^ dx+ for a separable alpha with continuous
/// factors (PreconditionViolation otherwise).
TwoForm exterior_derivative(const OneForm& alpha);

/// A separable one-form on the plane whose fiber integral is `o`: the plus slot
/// as phi(x+) rho(x-) dx- and the minus slot as rho(x+) psi(x-) dx+. Needs
/// the integral of rho to be 1 and a Minkowski observable.
OneForm separable_presentation(const Observable& o, const LineFn& rho);

/// The fiber-integrated class of zeta = rho(x+ + x-) dx^sign on the cylinder:
/// the constant 1 in the opposite slot. Throws PreconditionViolation unless
/// the integral of rho is exactly 1.
Observable cohomology_basis_zeta(const LineFn& rho, Sign sign);

}  // namespace chiralkit::current
