#pragma once

#include <variant>
#include <vector>

#include "chiralkit/aqft.hpp"
#include "chiralkit/current/observable.hpp"
#include "chiralkit/current/weyl.hpp"

namespace chiralkit::current {

using Elem2 = WeylElement<Observable>;

/// The central topological generator of the circle chiral algebra.
struct Zeta {
  friend bool operator==(const Zeta&, const Zeta&) = default;
  friend std::strong_ordering operator<=>(const Zeta&, const Zeta&) = default;
};
using ChiralLetter = std::variant<LineFn, CircleFn, Zeta>;
using ChiralElem = WeylElement<ChiralLetter>;

std::string str(const ChiralLetter& l);
/// tau_R, tau_T, and zero against zeta.
Rational chiral_tau(const ChiralLetter& a, const ChiralLetter& b);
/// Pushforward along a 1d morphism; zeta is fixed.
ChiralLetter push_letter(const skelcat::SkelMorphism1& m, const ChiralLetter& l);

/// Probe families; every line function is supported in [-3, 3].
std::vector<LineFn> line_generators();
std::vector<CircleFn> circle_generators();
std::vector<Observable> observable_generators(Obj2 ambient);
/// Observables supported inside the bounded part of a cone (cut to (-3, 3)).
std::vector<Observable> cone_generators(const geometry::DoubleCone& dc);

/// The Abelian current on the skeletal 2d category.
aqft::AQFTModel<aqft::Skel2Cat, Elem2> current_model();
/// The same theory on double cones and the cylinder.
aqft::AQFTModel<aqft::C2DCat, Elem2> c2d_current_model();
/// CCR(C_c(R), tau_R) on the line, CCR(C(T), tau_T) with zeta on the circle.
aqft::AQFTModel<aqft::Skel1Cat, ChiralElem> chiral_component_model(Sign sign);

enum class Corruption {
  SignFlip,     ///< A(f) multiplies degree-1 letters by -1 for f != id
  ConstantTau,  ///< tau replaced by 1 on distinct letters
  WrongInverse  ///< the inverse action is the forward action
};
aqft::AQFTModel<aqft::Skel2Cat, Elem2> corrupted_current_model(Corruption c);

/// Every letter satisfies the chiral generator predicate.
bool all_letters_chiral(Obj2 ambient, Sign sign, const Elem2& e);

}  // namespace chiralkit::current
