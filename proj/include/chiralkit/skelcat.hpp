#pragma once

#include <string>
#include <variant>

#include "chiralkit/geometry.hpp"
#include "chiralkit/maps1d.hpp"

// The two-object skeletal categories: 2d (Minkowski plane, cylinder) and the
// 1d chiral shadow (line, circle).
namespace chiralkit::skelcat {

using maps1d::BoundedLineEmbedding;
using maps1d::CircleMapLift;
using maps1d::LineEmbedding;

enum class Obj2 { Minkowski, Cylinder };
enum class Obj1 { Line, Circle };
enum class Sign { Plus, Minus };

std::string to_string(Obj2 o);
std::string to_string(Obj1 o);
std::string to_string(Sign s);
inline Sign opposite(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }

struct MtoM {
  LineEmbedding plus;
  LineEmbedding minus;
  friend bool operator==(const MtoM&, const MtoM&) = default;
};

/// Stored in mod-Z normal form; construct with make_mto_cyl.
struct MtoCyl {
  BoundedLineEmbedding plus;
  BoundedLineEmbedding minus;
  friend bool operator==(const MtoCyl&, const MtoCyl&) = default;
};

struct CylToCyl {
  CircleMapLift plus;
  CircleMapLift minus;
  friend bool operator==(const CylToCyl&, const CylToCyl&) = default;
};

using SkelMorphism2 = std::variant<MtoM, MtoCyl, CylToCyl>;

MtoCyl make_mto_cyl(const LineEmbedding& plus, const LineEmbedding& minus);
/// Canonical matrices and normal form; equality of canonical forms is equality of maps.
SkelMorphism2 canonical(const SkelMorphism2& m);

Obj2 source(const SkelMorphism2& m);
Obj2 target(const SkelMorphism2& m);
SkelMorphism2 identity2(Obj2 o);

/// m2 o m1; SourceTargetMismatch when not composable.
SkelMorphism2 compose2(const SkelMorphism2& m2, const SkelMorphism2& m1);
/// SourceTargetMismatch when the targets differ.
bool orthogonal2(const SkelMorphism2& m1, const SkelMorphism2& m2);
/// Image double cone of an MtoM or MtoCyl morphism (lightcone representatives).
geometry::DoubleCone image_cone(const SkelMorphism2& m);

struct LineToLine {
  LineEmbedding map;
  friend bool operator==(const LineToLine&, const LineToLine&) = default;
};
/// Stored in mod-Z normal form.
struct LineToCircle {
  BoundedLineEmbedding map;
  friend bool operator==(const LineToCircle&, const LineToCircle&) = default;
};
struct CircleToCircle {
  CircleMapLift map;
  friend bool operator==(const CircleToCircle&, const CircleToCircle&) = default;
};

using SkelMorphism1 = std::variant<LineToLine, LineToCircle, CircleToCircle>;

LineToCircle make_line_to_circle(const LineEmbedding& f);
Obj1 source(const SkelMorphism1& m);
Obj1 target(const SkelMorphism1& m);
SkelMorphism1 identity1(Obj1 o);
SkelMorphism1 compose1(const SkelMorphism1& m2, const SkelMorphism1& m1);
bool orthogonal1(const SkelMorphism1& m1, const SkelMorphism1& m2);

inline Obj1 pi_project(Obj2 o) { return o == Obj2::Minkowski ? Obj1::Line : Obj1::Circle; }
SkelMorphism1 pi_project(const SkelMorphism2& m, Sign sign);

/// Both components surjective for MtoM; always for CylToCyl; never for MtoCyl.
bool is_cauchy2(const SkelMorphism2& m);

/// Embeds a 1d morphism into the opposite slot: (id, k) for sign Plus and
/// (k, id) for sign Minus. Only LineToLine and CircleToCircle embed.
SkelMorphism2 embed_opposite(const SkelMorphism1& k, Sign sign);

/// The 2d morphism acting as `m` in the `sign` slot and as the identity in the other.
SkelMorphism2 embed_in_slot(const SkelMorphism1& m, Sign sign);

std::string str(const SkelMorphism2& m);
std::string str(const SkelMorphism1& m);

}  // namespace chiralkit::skelcat
