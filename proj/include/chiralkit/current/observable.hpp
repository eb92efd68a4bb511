#pragma once

#include <compare>
#include <optional>
#include <string>

#include "chiralkit/current/slot_functions.hpp"
#include "chiralkit/localization.hpp"
#include "chiralkit/skelcat.hpp"

namespace chiralkit::current {

using skelcat::Obj2;
using skelcat::Sign;

/// phi+ (+) phi-: LineFn slots on M, CircleFn slots on M/Z.
class Observable {
 public:
  /// Throws AmbientMismatch when the slot kinds do not fit the ambient.
  Observable(Obj2 ambient, SlotFn plus, SlotFn minus);

  static Observable zero(Obj2 ambient);
  static Observable plus_only(const LineFn& f) { return {Obj2::Minkowski, f, LineFn{}}; }
  static Observable minus_only(const LineFn& f) { return {Obj2::Minkowski, LineFn{}, f}; }

  Obj2 ambient() const { return ambient_; }
  const SlotFn& plus() const { return plus_; }
  const SlotFn& minus() const { return minus_; }
  const SlotFn& slot(Sign s) const { return s == Sign::Plus ? plus_ : minus_; }

  std::string str() const;

  friend bool operator==(const Observable&, const Observable&) = default;
  friend std::strong_ordering operator<=>(const Observable& a, const Observable& b);

 private:
  Obj2 ambient_;
  SlotFn plus_;
  SlotFn minus_;
};

/// tau(phi, psi) = -1/2 (int phi+ dpsi+ + int phi- dpsi-); AmbientMismatch across ambients.
Rational poisson_tau(const Observable& a, const Observable& b);

/// Slot-wise pushforward; MtoCyl results are folded onto the circle.
Observable pushforward_observable(const skelcat::SkelMorphism2& m, const Observable& o);

/// Line slot pushed along a bounded map and folded onto the circle.
CircleFn pushforward_to_circle(const maps1d::PiecewiseMobius& f, const LineFn& phi);

/// Same for morphisms of the double-cone category; slots must be supported in
/// the source cone factors.
Observable pushforward_observable(const localization::C2DMorphism& m, const Observable& o);

/// Sign +: the minus slot is zero (M) or constant (M/Z). Sign -: mirrored.
bool chiral_generator_predicate(Obj2 ambient, Sign sign, const Observable& o);

/// A translation (M) or rotation (M/Z) in the opposite slot that moves o, when
/// the predicate fails. Returned as the 1d morphism k; it acts as embed_opposite(k, sign).
std::optional<skelcat::SkelMorphism1> moving_witness(Sign sign, const Observable& o);

}  // namespace chiralkit::current
