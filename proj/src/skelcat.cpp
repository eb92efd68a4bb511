#include "chiralkit/skelcat.hpp"

#include <stdexcept>

#include "chiralkit/errors.hpp"

namespace chiralkit::skelcat {

using geometry::DoubleCone;
using geometry::Interval;
using maps1d::canonicalize;
using maps1d::compose_circle;
using maps1d::compose_line;
using maps1d::compose_lift_line;

std::string to_string(Obj2 o) { return o == Obj2::Minkowski ? "M" : "M/Z"; }
std::string to_string(Obj1 o) { return o == Obj1::Line ? "R" : "T"; }
std::string to_string(Sign s) { return s == Sign::Plus ? "+" : "-"; }

MtoCyl make_mto_cyl(const LineEmbedding& plus, const LineEmbedding& minus) {
  auto n = maps1d::normalize_pair_mod_z(BoundedLineEmbedding(canonicalize(plus)),
                                        BoundedLineEmbedding(canonicalize(minus)));
  return {std::move(n.plus), std::move(n.minus)};
}

LineToCircle make_line_to_circle(const LineEmbedding& f) {
  return {maps1d::normalize_mod_z(BoundedLineEmbedding(canonicalize(f))).first};
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

CircleMapLift canonical_lift(const CircleMapLift& g) {
  return maps1d::build_lift(g.breakpoints(), [&](const Rational& x) { return g.matrix_at(x); });
}

}  // namespace

SkelMorphism2 canonical(const SkelMorphism2& m) {
  return std::visit(
      overloaded{
          [](const MtoM& f) -> SkelMorphism2 { return MtoM{canonicalize(f.plus), canonicalize(f.minus)}; },
          [](const MtoCyl& f) -> SkelMorphism2 { return make_mto_cyl(f.plus.base(), f.minus.base()); },
          [](const CylToCyl& g) -> SkelMorphism2 {
            return CylToCyl{canonical_lift(g.plus), canonical_lift(g.minus)};
          },
      },
      m);
}

Obj2 source(const SkelMorphism2& m) {
  return std::holds_alternative<CylToCyl>(m) ? Obj2::Cylinder : Obj2::Minkowski;
}

Obj2 target(const SkelMorphism2& m) {
  return std::holds_alternative<MtoM>(m) ? Obj2::Minkowski : Obj2::Cylinder;
}

SkelMorphism2 identity2(Obj2 o) {
  if (o == Obj2::Minkowski) return MtoM{LineEmbedding::identity(), LineEmbedding::identity()};
  return CylToCyl{CircleMapLift::identity(), CircleMapLift::identity()};
}

SkelMorphism2 compose2(const SkelMorphism2& m2, const SkelMorphism2& m1) {
  if (target(m1) != source(m2)) {
    throw SourceTargetMismatch("cannot compose " + str(m2) + " after " + str(m1));
  }
  if (const auto* f = std::get_if<MtoM>(&m1)) {
    if (const auto* g = std::get_if<MtoM>(&m2)) {
      return MtoM{compose_line(g->plus, f->plus), compose_line(g->minus, f->minus)};
    }
    const auto& g = std::get<MtoCyl>(m2);
    return make_mto_cyl(compose_line(g.plus.base(), f->plus), compose_line(g.minus.base(), f->minus));
  }
  if (const auto* f = std::get_if<MtoCyl>(&m1)) {
    const auto& g = std::get<CylToCyl>(m2);
    return make_mto_cyl(compose_lift_line(g.plus, f->plus.base()),
                        compose_lift_line(g.minus, f->minus.base()));
  }
  const auto& f = std::get<CylToCyl>(m1);
  const auto& g = std::get<CylToCyl>(m2);
  return CylToCyl{compose_circle(g.plus, f.plus), compose_circle(g.minus, f.minus)};
}

DoubleCone image_cone(const SkelMorphism2& m) {
  if (const auto* f = std::get_if<MtoM>(&m)) return {f->plus.image(), f->minus.image()};
  if (const auto* f = std::get_if<MtoCyl>(&m)) return {f->plus.image(), f->minus.image()};
  throw std::invalid_argument("a cylinder automorphism has no image cone");
}

bool orthogonal2(const SkelMorphism2& m1, const SkelMorphism2& m2) {
  if (target(m1) != target(m2)) {
    throw SourceTargetMismatch("orthogonality needs a common target: " + str(m1) + " vs " + str(m2));
  }
  if (std::holds_alternative<CylToCyl>(m1) || std::holds_alternative<CylToCyl>(m2)) return false;
  if (target(m1) == Obj2::Minkowski) {
    return geometry::causally_disjoint_minkowski(image_cone(m1), image_cone(m2));
  }
  return geometry::causally_disjoint_cylinder(image_cone(m1), image_cone(m2));
}

Obj1 source(const SkelMorphism1& m) {
  return std::holds_alternative<CircleToCircle>(m) ? Obj1::Circle : Obj1::Line;
}

Obj1 target(const SkelMorphism1& m) {
  return std::holds_alternative<LineToLine>(m) ? Obj1::Line : Obj1::Circle;
}

SkelMorphism1 identity1(Obj1 o) {
  if (o == Obj1::Line) return LineToLine{LineEmbedding::identity()};
  return CircleToCircle{CircleMapLift::identity()};
}

SkelMorphism1 compose1(const SkelMorphism1& m2, const SkelMorphism1& m1) {
  if (target(m1) != source(m2)) {
    throw SourceTargetMismatch("cannot compose " + str(m2) + " after " + str(m1));
  }
  if (const auto* f = std::get_if<LineToLine>(&m1)) {
    if (const auto* g = std::get_if<LineToLine>(&m2)) return LineToLine{compose_line(g->map, f->map)};
    return make_line_to_circle(compose_line(std::get<LineToCircle>(m2).map.base(), f->map));
  }
  if (const auto* f = std::get_if<LineToCircle>(&m1)) {
    return make_line_to_circle(compose_lift_line(std::get<CircleToCircle>(m2).map, f->map.base()));
  }
  return CircleToCircle{
      compose_circle(std::get<CircleToCircle>(m2).map, std::get<CircleToCircle>(m1).map)};
}

bool orthogonal1(const SkelMorphism1& m1, const SkelMorphism1& m2) {
  if (target(m1) != target(m2)) {
    throw SourceTargetMismatch("orthogonality needs a common target: " + str(m1) + " vs " + str(m2));
  }
  if (std::holds_alternative<CircleToCircle>(m1) || std::holds_alternative<CircleToCircle>(m2)) {
    return false;
  }
  if (const auto* f = std::get_if<LineToLine>(&m1)) {
    return !f->map.image().meets(std::get<LineToLine>(m2).map.image());
  }
  // Some translate image2 + n meets image1 iff n lies in (a1 - b2, b1 - a2).
  const Interval i1 = std::get<LineToCircle>(m1).map.image();
  const Interval i2 = std::get<LineToCircle>(m2).map.image();
  const Rational lo = i1.lo().value() - i2.hi().value();
  const Rational hi = i1.hi().value() - i2.lo().value();
  return !(Rational(floor_of(lo) + 1) < hi);
}

SkelMorphism1 pi_project(const SkelMorphism2& m, Sign sign) {
  const bool plus = sign == Sign::Plus;
  if (const auto* f = std::get_if<MtoM>(&m)) return LineToLine{plus ? f->plus : f->minus};
  if (const auto* f = std::get_if<MtoCyl>(&m)) {
    return make_line_to_circle(plus ? f->plus.base() : f->minus.base());
  }
  const auto& g = std::get<CylToCyl>(m);
  return CircleToCircle{plus ? g.plus : g.minus};
}

bool is_cauchy2(const SkelMorphism2& m) {
  if (const auto* f = std::get_if<MtoM>(&m)) {
    return maps1d::is_surjective(f->plus) && maps1d::is_surjective(f->minus);
  }
  return std::holds_alternative<CylToCyl>(m);
}

SkelMorphism2 embed_in_slot(const SkelMorphism1& m, Sign sign) {
  const bool plus = sign == Sign::Plus;
  if (const auto* f = std::get_if<LineToLine>(&m)) {
    const LineEmbedding id = LineEmbedding::identity();
    return plus ? MtoM{f->map, id} : MtoM{id, f->map};
  }
  if (const auto* g = std::get_if<CircleToCircle>(&m)) {
    const CircleMapLift id = CircleMapLift::identity();
    return plus ? CylToCyl{g->map, id} : CylToCyl{id, g->map};
  }
  throw std::invalid_argument("a line-to-circle morphism has no slot embedding");
}

SkelMorphism2 embed_opposite(const SkelMorphism1& k, Sign sign) { return embed_in_slot(k, opposite(sign)); }

std::string str(const SkelMorphism2& m) {
  return std::visit(overloaded{
                        [](const MtoM& f) { return "M->M (" + f.plus.str() + " ; " + f.minus.str() + ")"; },
                        [](const MtoCyl& f) {
                          return "M->M/Z [" + f.plus.base().str() + " ; " + f.minus.base().str() + "]";
                        },
                        [](const CylToCyl& g) {
                          return "M/Z->M/Z (" + g.plus.str() + " ; " + g.minus.str() + ")";
                        },
                    },
                    m);
}

std::string str(const SkelMorphism1& m) {
  return std::visit(overloaded{
                        [](const LineToLine& f) { return "R->R " + f.map.str(); },
                        [](const LineToCircle& f) { return "R->T " + f.map.base().str(); },
                        [](const CircleToCircle& g) { return "T->T " + g.map.str(); },
                    },
                    m);
}

}  // namespace chiralkit::skelcat
