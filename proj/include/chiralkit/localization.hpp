#pragma once

#include <optional>
#include <string>
#include <variant>

#include "chiralkit/geometry.hpp"
#include "chiralkit/maps1d.hpp"
#include "chiralkit/skelcat.hpp"

// The double-cone category (objects: double cones and the cylinder), the
// skeletalization isomorphisms, and the development functor D on cone unions.
namespace chiralkit::localization {

using geometry::ConeUnion;
using geometry::DoubleCone;
using geometry::Point;
using maps1d::CircleMapLift;
using maps1d::PiecewiseMobius;

struct Cone {
  DoubleCone dc;
  friend bool operator==(const Cone&, const Cone&) = default;
};
struct Cylinder {
  friend bool operator==(const Cylinder&, const Cylinder&) = default;
};
using C2DObject = std::variant<Cone, Cylinder>;

std::string str(const C2DObject& o);

/// Factor maps on the factors of a source cone.
struct FactorMaps {
  PiecewiseMobius plus;
  PiecewiseMobius minus;
};
struct LiftMaps {
  CircleMapLift plus;
  CircleMapLift minus;
};

struct C2DMorphism {
  C2DObject source;
  C2DObject target;
  std::variant<FactorMaps, LiftMaps> maps;
};

/// Checks domains, images and the cylinder width bound; throws PreconditionViolation.
C2DMorphism make_c2d(C2DObject source, C2DObject target, FactorMaps maps);

Point apply(const C2DMorphism& f, const Point& p);
/// Image cone of a cone-sourced morphism.
DoubleCone image_cone(const C2DMorphism& f);
C2DMorphism compose_c2d(const C2DMorphism& g, const C2DMorphism& f);
C2DMorphism identity_c2d(const C2DObject& o);
bool orthogonal_c2d(const C2DMorphism& f1, const C2DMorphism& f2);
/// Factor maps onto the target factors (cone target), or a cylinder automorphism.
bool is_cauchy_c2d(const C2DMorphism& f);
/// Inverse of a Cauchy morphism; throws PreconditionViolation otherwise.
C2DMorphism inverse_c2d(const C2DMorphism& f);

/// Skeletal object -> double-cone object: M is the full plane.
C2DObject include_object(skelcat::Obj2 o);
C2DMorphism include_morphism(const skelcat::SkelMorphism2& m);

struct Skeletalization {
  skelcat::Obj2 object;
  C2DMorphism iso;      ///< o -> include_object(object)
  C2DMorphism inverse;  ///< include_object(object) -> o
};
Skeletalization skeletalize_object(const C2DObject& o);

/// Conjugates a cone-sourced morphism by the skeletalization isomorphisms.
skelcat::SkelMorphism2 transport_to_skeleton(const C2DMorphism& f);

/// A global skeletal morphism restricted to a cone union.
struct FragmentMorphism {
  ConeUnion source;
  C2DObject target;
  skelcat::SkelMorphism2 global;  ///< MtoM for a cone target, MtoCyl for the cylinder
};

/// D(f) between Cauchy developments. Propagates DisconnectedProjection.
C2DMorphism d_localize(const FragmentMorphism& f);

/// Compares eta o f with D(f) o eta at p, a point of the source union; `df` is d_localize(f).
bool naturality_holds_at(const FragmentMorphism& f, const C2DMorphism& df, const Point& p);

}  // namespace chiralkit::localization
