#include "chiralkit/localization.hpp"

#include <stdexcept>

#include "chiralkit/errors.hpp"

namespace chiralkit::localization {

using geometry::Interval;
using maps1d::chart_onto;
using maps1d::compose_line;
using maps1d::invert_on_image;
using skelcat::CylToCyl;
using skelcat::MtoCyl;
using skelcat::MtoM;
using skelcat::Obj2;

std::string str(const C2DObject& o) {
  if (const auto* c = std::get_if<Cone>(&o)) return "cone " + c->dc.str();
  return "cylinder";
}

namespace {

const DoubleCone& cone_of(const C2DObject& o) {
  if (const auto* c = std::get_if<Cone>(&o)) return c->dc;
  throw PreconditionViolation("expected a double cone object");
}

bool is_cylinder(const C2DObject& o) { return std::holds_alternative<Cylinder>(o); }

DoubleCone full_plane() { return {Interval::whole_line(), Interval::whole_line()}; }

}  // namespace

C2DMorphism make_c2d(C2DObject source, C2DObject target, FactorMaps maps) {
  const DoubleCone& src = cone_of(source);
  if (!(maps.plus.domain() == src.plus) || !(maps.minus.domain() == src.minus)) {
    throw PreconditionViolation("factor maps must be defined on the source factors of " + src.str());
  }
  for (const auto* f : {&maps.plus, &maps.minus}) {
    if (auto defect = maps1d::validate(*f)) throw PreconditionViolation("invalid factor map: " + *defect);
  }
  const DoubleCone img{maps.plus.image(), maps.minus.image()};
  if (const auto* t = std::get_if<Cone>(&target)) {
    if (!t->dc.contains(img)) {
      throw PreconditionViolation("image " + img.str() + " not inside target " + t->dc.str());
    }
  } else {
    for (const auto* f : {&img.plus, &img.minus}) {
      if (!f->is_bounded() || f->length() > 1) {
        throw PreconditionViolation("a map into the cylinder needs factor images of length <= 1");
      }
    }
  }
  return {std::move(source), std::move(target), std::move(maps)};
}

Point apply(const C2DMorphism& f, const Point& p) {
  if (const auto* m = std::get_if<FactorMaps>(&f.maps)) return {m->plus(p.plus), m->minus(p.minus)};
  const auto& g = std::get<LiftMaps>(f.maps);
  return {g.plus(p.plus), g.minus(p.minus)};
}

DoubleCone image_cone(const C2DMorphism& f) {
  const auto& m = std::get<FactorMaps>(f.maps);
  return {m.plus.image(), m.minus.image()};
}

C2DMorphism compose_c2d(const C2DMorphism& g, const C2DMorphism& f) {
  if (!(f.target == g.source)) {
    throw SourceTargetMismatch("cannot compose: " + str(f.target) + " vs " + str(g.source));
  }
  if (const auto* fm = std::get_if<FactorMaps>(&f.maps)) {
    if (const auto* gm = std::get_if<FactorMaps>(&g.maps)) {
      return {f.source, g.target,
              FactorMaps{compose_line(gm->plus, fm->plus), compose_line(gm->minus, fm->minus)}};
    }
    const auto& gl = std::get<LiftMaps>(g.maps);
    return {f.source, g.target,
            FactorMaps{maps1d::compose_lift_line(gl.plus, fm->plus),
                       maps1d::compose_lift_line(gl.minus, fm->minus)}};
  }
  const auto& fl = std::get<LiftMaps>(f.maps);
  const auto& gl = std::get<LiftMaps>(g.maps);
  return {f.source, g.target,
          LiftMaps{maps1d::compose_circle(gl.plus, fl.plus), maps1d::compose_circle(gl.minus, fl.minus)}};
}

C2DMorphism identity_c2d(const C2DObject& o) {
  if (is_cylinder(o)) return {o, o, LiftMaps{CircleMapLift::identity(), CircleMapLift::identity()}};
  const DoubleCone& dc = cone_of(o);
  return {o, o,
          FactorMaps{PiecewiseMobius(maps1d::MobiusMatrix::identity(), dc.plus),
                     PiecewiseMobius(maps1d::MobiusMatrix::identity(), dc.minus)}};
}

bool orthogonal_c2d(const C2DMorphism& f1, const C2DMorphism& f2) {
  if (!(f1.target == f2.target)) throw SourceTargetMismatch("orthogonality needs a common target");
  if (std::holds_alternative<LiftMaps>(f1.maps) || std::holds_alternative<LiftMaps>(f2.maps)) return false;
  if (is_cylinder(f1.target)) return geometry::causally_disjoint_cylinder(image_cone(f1), image_cone(f2));
  return geometry::causally_disjoint_minkowski(image_cone(f1), image_cone(f2));
}

bool is_cauchy_c2d(const C2DMorphism& f) {
  if (std::holds_alternative<LiftMaps>(f.maps)) return true;
  if (is_cylinder(f.target)) return false;
  return image_cone(f) == cone_of(f.target);
}

C2DMorphism inverse_c2d(const C2DMorphism& f) {
  if (!is_cauchy_c2d(f)) throw PreconditionViolation("only Cauchy morphisms are invertible here");
  if (const auto* m = std::get_if<FactorMaps>(&f.maps)) {
    return {f.target, f.source, FactorMaps{invert_on_image(m->plus), invert_on_image(m->minus)}};
  }
  const auto& g = std::get<LiftMaps>(f.maps);
  return {f.target, f.source, LiftMaps{maps1d::invert_lift(g.plus), maps1d::invert_lift(g.minus)}};
}

C2DObject include_object(Obj2 o) {
  if (o == Obj2::Cylinder) return Cylinder{};
  return Cone{full_plane()};
}

C2DMorphism include_morphism(const skelcat::SkelMorphism2& m) {
  if (const auto* f = std::get_if<MtoM>(&m)) {
    return {include_object(Obj2::Minkowski), include_object(Obj2::Minkowski), FactorMaps{f->plus, f->minus}};
  }
  if (const auto* f = std::get_if<MtoCyl>(&m)) {
    return {include_object(Obj2::Minkowski), Cylinder{}, FactorMaps{f->plus.base(), f->minus.base()}};
  }
  const auto& g = std::get<CylToCyl>(m);
  return {Cylinder{}, Cylinder{}, LiftMaps{g.plus, g.minus}};
}

Skeletalization skeletalize_object(const C2DObject& o) {
  if (is_cylinder(o)) return {Obj2::Cylinder, identity_c2d(o), identity_c2d(o)};
  const DoubleCone& dc = cone_of(o);
  const C2DObject plane = include_object(Obj2::Minkowski);
  const auto cp = chart_onto(dc.plus);
  const auto cm = chart_onto(dc.minus);
  return {Obj2::Minkowski, {o, plane, FactorMaps{invert_on_image(cp), invert_on_image(cm)}},
          {plane, o, FactorMaps{cp, cm}}};
}

skelcat::SkelMorphism2 transport_to_skeleton(const C2DMorphism& f) {
  const auto& m = std::get<FactorMaps>(f.maps);
  const DoubleCone& src = cone_of(f.source);
  const auto plus = compose_line(m.plus, chart_onto(src.plus));
  const auto minus = compose_line(m.minus, chart_onto(src.minus));
  if (is_cylinder(f.target)) return skelcat::make_mto_cyl(plus, minus);
  const DoubleCone& tgt = cone_of(f.target);
  return MtoM{compose_line(invert_on_image(chart_onto(tgt.plus)), plus),
              compose_line(invert_on_image(chart_onto(tgt.minus)), minus)};
}

C2DMorphism d_localize(const FragmentMorphism& f) {
  const DoubleCone dev = geometry::cauchy_development(f.source);
  if (const auto* g = std::get_if<MtoM>(&f.global)) {
    return make_c2d(Cone{dev}, f.target,
                    FactorMaps{maps1d::restrict_to(g->plus, dev.plus), maps1d::restrict_to(g->minus, dev.minus)});
  }
  if (const auto* g = std::get_if<MtoCyl>(&f.global)) {
    return make_c2d(Cone{dev}, f.target,
                    FactorMaps{maps1d::restrict_to(g->plus.base(), dev.plus),
                               maps1d::restrict_to(g->minus.base(), dev.minus)});
  }
  throw PreconditionViolation("a fragment morphism needs a cone-sourced global morphism");
}

bool naturality_holds_at(const FragmentMorphism& f, const C2DMorphism& df, const Point& p) {
  if (!f.source.contains(p)) throw std::invalid_argument("sample point outside the fragment");
  Point direct;
  if (const auto* g = std::get_if<MtoM>(&f.global)) {
    direct = {g->plus(p.plus), g->minus(p.minus)};
  } else {
    const auto& h = std::get<MtoCyl>(f.global);
    direct = {h.plus.base()(p.plus), h.minus.base()(p.minus)};
  }
  if (const auto* t = std::get_if<Cone>(&f.target); t && !t->dc.contains(direct)) return false;
  return apply(df, p) == direct;
}

}  // namespace chiralkit::localization
