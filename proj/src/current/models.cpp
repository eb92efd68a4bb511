#include "chiralkit/current/models.hpp"

#include "chiralkit/errors.hpp"

namespace chiralkit::current {

using localization::C2DMorphism;
using localization::C2DObject;
using skelcat::CircleToCircle;
using skelcat::LineToCircle;
using skelcat::LineToLine;
using skelcat::SkelMorphism1;
using skelcat::SkelMorphism2;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Elem2 push2(const SkelMorphism2& m, const Elem2& e) {
  return e.map_letters([&](const Observable& o) { return pushforward_observable(m, o); });
}

SkelMorphism2 inverse2(const SkelMorphism2& m) {
  if (!skelcat::is_cauchy2(m)) throw PreconditionViolation("no inverse for " + skelcat::str(m));
  if (const auto* f = std::get_if<skelcat::MtoM>(&m)) {
    return skelcat::MtoM{maps1d::invert_on_image(f->plus), maps1d::invert_on_image(f->minus)};
  }
  const auto& g = std::get<skelcat::CylToCyl>(m);
  return skelcat::CylToCyl{maps1d::invert_lift(g.plus), maps1d::invert_lift(g.minus)};
}

SkelMorphism1 inverse1(const SkelMorphism1& m) {
  if (const auto* f = std::get_if<LineToLine>(&m)) {
    if (!maps1d::is_surjective(f->map)) throw PreconditionViolation("no inverse for " + skelcat::str(m));
    return LineToLine{maps1d::invert_on_image(f->map)};
  }
  if (const auto* g = std::get_if<CircleToCircle>(&m)) return CircleToCircle{maps1d::invert_lift(g->map)};
  throw PreconditionViolation("no inverse for " + skelcat::str(m));
}

std::string algebra_label(Obj2 o) {
  return o == Obj2::Minkowski ? "CCR(C_c(R) + C_c(R), tau_M)" : "CCR(C(T) + C(T), tau_M/Z)";
}

std::vector<Elem2> as_generators(const std::vector<Observable>& obs) {
  std::vector<Elem2> out;
  for (const auto& o : obs) out.push_back(Elem2::generator(o));
  return out;
}

std::string show2(const Elem2& e) {
  return e.str([](const Observable& o) { return "W[" + o.str() + "]"; });
}

Elem2 product2(const Elem2& a, const Elem2& b) { return star(a, b, poisson_tau); }

}  // namespace

std::string str(const ChiralLetter& l) {
  return std::visit(overloaded{[](const LineFn& f) { return f.str(); }, [](const CircleFn& f) { return f.str(); },
                               [](const Zeta&) { return std::string("zeta"); }},
                    l);
}

Rational chiral_tau(const ChiralLetter& a, const ChiralLetter& b) {
  if (const auto* f = std::get_if<LineFn>(&a)) {
    if (const auto* g = std::get_if<LineFn>(&b)) return tau_line(*f, *g);
    throw AmbientMismatch("tau between a line and a circle letter");
  }
  if (std::holds_alternative<Zeta>(a) || std::holds_alternative<Zeta>(b)) {
    if (std::holds_alternative<LineFn>(a) || std::holds_alternative<LineFn>(b)) {
      throw AmbientMismatch("zeta lives on the circle");
    }
    return 0;
  }
  if (const auto* g = std::get_if<CircleFn>(&b)) return tau_circle(std::get<CircleFn>(a), *g);
  throw AmbientMismatch("tau between a circle and a line letter");
}

ChiralLetter push_letter(const SkelMorphism1& m, const ChiralLetter& l) {
  if (const auto* f = std::get_if<LineToLine>(&m)) {
    if (const auto* phi = std::get_if<LineFn>(&l)) return pushforward(f->map, *phi);
  } else if (const auto* f = std::get_if<LineToCircle>(&m)) {
    if (const auto* phi = std::get_if<LineFn>(&l)) return pushforward_to_circle(f->map.base(), *phi);
  } else {
    if (std::holds_alternative<Zeta>(l)) return l;
    if (const auto* phi = std::get_if<CircleFn>(&l)) return pushforward(std::get<CircleToCircle>(m).map, *phi);
  }
  throw SourceTargetMismatch("letter " + str(l) + " not in the source of " + skelcat::str(m));
}

std::vector<LineFn> line_generators() {
  return {LineFn::triangle(0, 1, 2), LineFn::triangle(1, 2, 3), LineFn::indicator(ratio(-1, 2), ratio(1, 2)),
          LineFn::quartic_bump(-3, -1)};
}

std::vector<CircleFn> circle_generators() {
  return {CircleFn::triangle(0, ratio(1, 4), ratio(1, 2)), CircleFn::triangle(ratio(1, 4), ratio(1, 2), ratio(3, 4)),
          CircleFn::fold(LineFn::indicator(ratio(1, 8), ratio(5, 8)))};
}

std::vector<Observable> observable_generators(Obj2 ambient) {
  if (ambient == Obj2::Minkowski) {
    const auto l = line_generators();
    return {Observable::plus_only(l[0]), Observable::minus_only(l[1]), Observable(ambient, l[2], l[0]),
            Observable(ambient, l[3], l[2])};
  }
  const auto c = circle_generators();
  return {Observable(ambient, c[0], CircleFn{}), Observable(ambient, CircleFn{}, c[1]),
          Observable(ambient, CircleFn(Rational(1)), c[2]), Observable(ambient, c[2], c[0])};
}

std::vector<Observable> cone_generators(const geometry::DoubleCone& dc) {
  auto bump = [](const geometry::Interval& factor) {
    const auto core = factor.intersect(geometry::Interval(-3, 3));
    if (!core) throw PreconditionViolation("cone factor " + factor.str() + " misses the probe window");
    const Rational w = core->length() / 4;
    return LineFn::triangle(core->lo().value() + w, core->midpoint(), core->hi().value() - w);
  };
  const LineFn p = bump(dc.plus);
  const LineFn m = bump(dc.minus);
  return {Observable::plus_only(p), Observable::minus_only(m), Observable(Obj2::Minkowski, p, m)};
}

bool all_letters_chiral(Obj2 ambient, Sign sign, const Elem2& e) {
  for (const auto& [w, c] : e.terms()) {
    for (const auto& o : w) {
      if (!chiral_generator_predicate(ambient, sign, o)) return false;
    }
  }
  return true;
}

aqft::AQFTModel<aqft::Skel2Cat, Elem2> current_model() {
  aqft::AQFTModel<aqft::Skel2Cat, Elem2> m;
  m.name = "current";
  m.on_object = algebra_label;
  m.on_morphism = push2;
  m.product = [](Obj2, const Elem2& a, const Elem2& b) { return product2(a, b); };
  m.unit = [](Obj2) { return Elem2::unit(); };
  m.involution = [](const Elem2& a) { return a.involution(); };
  m.scale = [](const ComplexRational& s, const Elem2& a) { return s * a; };
  m.equal = [](const Elem2& a, const Elem2& b, double) { return a == b; };
  m.generators = [](Obj2 o) { return as_generators(observable_generators(o)); };
  m.show = show2;
  m.inverse_on_morphism = [](const SkelMorphism2& f, const Elem2& a) { return push2(inverse2(f), a); };
  m.invariant = all_letters_chiral;
  return m;
}

aqft::AQFTModel<aqft::C2DCat, Elem2> c2d_current_model() {
  auto push = [](const C2DMorphism& f, const Elem2& e) {
    return e.map_letters([&](const Observable& o) { return pushforward_observable(f, o); });
  };
  aqft::AQFTModel<aqft::C2DCat, Elem2> m;
  m.name = "current on double cones";
  m.on_object = [](const C2DObject& o) {
    if (const auto* c = std::get_if<localization::Cone>(&o)) return "CCR(L(" + c->dc.str() + "))";
    return algebra_label(Obj2::Cylinder);
  };
  m.on_morphism = push;
  m.product = [](const C2DObject&, const Elem2& a, const Elem2& b) { return product2(a, b); };
  m.unit = [](const C2DObject&) { return Elem2::unit(); };
  m.involution = [](const Elem2& a) { return a.involution(); };
  m.scale = [](const ComplexRational& s, const Elem2& a) { return s * a; };
  m.equal = [](const Elem2& a, const Elem2& b, double) { return a == b; };
  m.generators = [](const C2DObject& o) {
    if (const auto* c = std::get_if<localization::Cone>(&o)) return as_generators(cone_generators(c->dc));
    return as_generators(observable_generators(Obj2::Cylinder));
  };
  m.show = show2;
  m.inverse_on_morphism = [push](const C2DMorphism& f, const Elem2& a) {
    return push(localization::inverse_c2d(f), a);
  };
  return m;
}

aqft::AQFTModel<aqft::Skel1Cat, ChiralElem> chiral_component_model(Sign sign) {
  using skelcat::Obj1;
  auto push = [](const SkelMorphism1& h, const ChiralElem& e) {
    return e.map_letters([&](const ChiralLetter& l) { return push_letter(h, l); });
  };
  aqft::AQFTModel<aqft::Skel1Cat, ChiralElem> m;
  m.name = "chiral" + skelcat::to_string(sign) + " current";
  m.on_object = [](Obj1 o) {
    return o == Obj1::Line ? std::string("CCR(C_c(R), tau_R)") : std::string("CCR(C(T), tau_T) (x) Sym R");
  };
  m.on_morphism = push;
  m.product = [](Obj1, const ChiralElem& a, const ChiralElem& b) { return star(a, b, chiral_tau); };
  m.unit = [](Obj1) { return ChiralElem::unit(); };
  m.involution = [](const ChiralElem& a) { return a.involution(); };
  m.scale = [](const ComplexRational& s, const ChiralElem& a) { return s * a; };
  m.equal = [](const ChiralElem& a, const ChiralElem& b, double) { return a == b; };
  m.generators = [](Obj1 o) {
    std::vector<ChiralElem> out;
    if (o == Obj1::Line) {
      for (const auto& f : line_generators()) out.push_back(ChiralElem::generator(f));
    } else {
      for (const auto& f : circle_generators()) out.push_back(ChiralElem::generator(f));
      out.push_back(ChiralElem::generator(Zeta{}));
    }
    return out;
  };
  m.show = [](const ChiralElem& e) {
    return e.str([](const ChiralLetter& l) { return "W[" + str(l) + "]"; });
  };
  m.inverse_on_morphism = [push](const SkelMorphism1& h, const ChiralElem& a) { return push(inverse1(h), a); };
  return m;
}

aqft::AQFTModel<aqft::Skel2Cat, Elem2> corrupted_current_model(Corruption c) {
  auto m = current_model();
  switch (c) {
    case Corruption::SignFlip:
      m.name = "current (sign flip)";
      m.on_morphism = [](const SkelMorphism2& f, const Elem2& a) {
        const Elem2 pushed = push2(f, a);
        if (skelcat::canonical(f) == skelcat::identity2(skelcat::source(f))) return pushed;
        return ComplexRational(-1) * pushed;
      };
      break;
    case Corruption::ConstantTau:
      m.name = "current (constant tau)";
      m.product = [](Obj2, const Elem2& a, const Elem2& b) {
        return star(a, b, [](const Observable& x, const Observable& y) {
          if (x == y) return Rational(0);
          return Rational(x < y ? 1 : -1);
        });
      };
      break;
    case Corruption::WrongInverse:
      m.name = "current (wrong inverse)";
      m.inverse_on_morphism = push2;
      break;
  }
  return m;
}

}  // namespace chiralkit::current
