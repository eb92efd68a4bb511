#include "chiralkit/current/observable.hpp"

#include "chiralkit/errors.hpp"

namespace chiralkit::current {

using skelcat::CylToCyl;
using skelcat::MtoCyl;
using skelcat::MtoM;

Observable::Observable(Obj2 ambient, SlotFn plus, SlotFn minus)
    : ambient_(ambient), plus_(std::move(plus)), minus_(std::move(minus)) {
  const std::size_t want = ambient_ == Obj2::Minkowski ? 0 : 1;
  if (plus_.index() != want || minus_.index() != want) {
    throw AmbientMismatch("slot functions do not match the ambient " + skelcat::to_string(ambient_));
  }
}

Observable Observable::zero(Obj2 ambient) {
  if (ambient == Obj2::Minkowski) return {ambient, LineFn{}, LineFn{}};
  return {ambient, CircleFn{}, CircleFn{}};
}

std::string Observable::str() const {
  return skelcat::to_string(ambient_) + " {+: " + current::str(plus_) + " ; -: " + current::str(minus_) + "}";
}

std::strong_ordering operator<=>(const Observable& a, const Observable& b) {
  if (a.ambient_ != b.ambient_) return static_cast<int>(a.ambient_) <=> static_cast<int>(b.ambient_);
  if (auto c = a.plus_ <=> b.plus_; c != 0) return c;
  return a.minus_ <=> b.minus_;
}

Rational poisson_tau(const Observable& a, const Observable& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("tau between observables on different ambients");
  if (a.ambient() == Obj2::Minkowski) {
    return tau_line(std::get<LineFn>(a.plus()), std::get<LineFn>(b.plus())) +
           tau_line(std::get<LineFn>(a.minus()), std::get<LineFn>(b.minus()));
  }
  return tau_circle(std::get<CircleFn>(a.plus()), std::get<CircleFn>(b.plus())) +
         tau_circle(std::get<CircleFn>(a.minus()), std::get<CircleFn>(b.minus()));
}

CircleFn pushforward_to_circle(const maps1d::PiecewiseMobius& f, const LineFn& phi) {
  return CircleFn::fold(pushforward(f, phi));
}

Observable pushforward_observable(const skelcat::SkelMorphism2& m, const Observable& o) {
  if (skelcat::source(m) != o.ambient()) {
    throw SourceTargetMismatch("morphism from " + skelcat::to_string(skelcat::source(m)) +
                               " applied to an observable on " + skelcat::to_string(o.ambient()));
  }
  if (const auto* f = std::get_if<MtoM>(&m)) {
    return {Obj2::Minkowski, pushforward(f->plus, std::get<LineFn>(o.plus())),
            pushforward(f->minus, std::get<LineFn>(o.minus()))};
  }
  if (const auto* f = std::get_if<MtoCyl>(&m)) {
    return {Obj2::Cylinder, pushforward_to_circle(f->plus.base(), std::get<LineFn>(o.plus())),
            pushforward_to_circle(f->minus.base(), std::get<LineFn>(o.minus()))};
  }
  const auto& g = std::get<CylToCyl>(m);
  return {Obj2::Cylinder, pushforward(g.plus, std::get<CircleFn>(o.plus())),
          pushforward(g.minus, std::get<CircleFn>(o.minus()))};
}

Observable pushforward_observable(const localization::C2DMorphism& m, const Observable& o) {
  using localization::FactorMaps;
  using localization::LiftMaps;
  if (const auto* g = std::get_if<LiftMaps>(&m.maps)) {
    if (o.ambient() != Obj2::Cylinder) throw SourceTargetMismatch("cylinder morphism on a plane observable");
    return {Obj2::Cylinder, pushforward(g->plus, std::get<CircleFn>(o.plus())),
            pushforward(g->minus, std::get<CircleFn>(o.minus()))};
  }
  if (o.ambient() != Obj2::Minkowski) throw SourceTargetMismatch("cone morphism on a cylinder observable");
  const auto& f = std::get<FactorMaps>(m.maps);
  if (std::holds_alternative<localization::Cylinder>(m.target)) {
    return {Obj2::Cylinder, pushforward_to_circle(f.plus, std::get<LineFn>(o.plus())),
            pushforward_to_circle(f.minus, std::get<LineFn>(o.minus()))};
  }
  return {Obj2::Minkowski, pushforward(f.plus, std::get<LineFn>(o.plus())),
          pushforward(f.minus, std::get<LineFn>(o.minus()))};
}

bool chiral_generator_predicate(Obj2 ambient, Sign sign, const Observable& o) {
  if (o.ambient() != ambient) throw AmbientMismatch("observable ambient differs from the requested one");
  const SlotFn& other = o.slot(skelcat::opposite(sign));
  if (ambient == Obj2::Minkowski) return std::get<LineFn>(other).is_zero();
  return std::get<CircleFn>(other).is_constant();
}

std::optional<skelcat::SkelMorphism1> moving_witness(Sign sign, const Observable& o) {
  if (chiral_generator_predicate(o.ambient(), sign, o)) return std::nullopt;
  const SlotFn& other = o.slot(skelcat::opposite(sign));
  if (o.ambient() == Obj2::Minkowski) {
    const auto supp = *std::get<LineFn>(other).support();
    return skelcat::LineToLine{maps1d::LineEmbedding::translation(supp.second - supp.first + 1)};
  }
  // A nonconstant function invariant under rotation by 1/q has at least q knots.
  const auto& psi = std::get<CircleFn>(other);
  for (long q = 2;; ++q) {
    auto rot = maps1d::CircleMapLift::rotation(ratio(1, q));
    if (!(pushforward(rot, psi) == psi)) return skelcat::CircleToCircle{std::move(rot)};
  }
}

}  // namespace chiralkit::current
