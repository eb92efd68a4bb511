#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "chiralkit/errors.hpp"
#include "chiralkit/localization.hpp"
#include "chiralkit/skelcat.hpp"

// Functors to algebras and their law suites.
namespace chiralkit::aqft {

using skelcat::Sign;

// ------------------------------------------------------------------ reports

struct Record {
  Record() = default;
  Record(std::string l, std::string in) : law(std::move(l)), inputs(std::move(in)) {}

  std::string law;
  std::string inputs;
  bool pass = true;
  std::string witness;
  std::string note;  ///< e.g. LOW-CONFIDENCE
};

struct Report {
  std::vector<Record> records;

  bool passed() const {
    for (const auto& r : records) {
      if (!r.pass) return false;
    }
    return true;
  }
  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.pass ? 0 : 1;
    return n;
  }
  void add(Record r) { records.push_back(std::move(r)); }
  void merge(const Report& o) { records.insert(records.end(), o.records.begin(), o.records.end()); }
  /// One line per record: law | inputs | PASS/FAIL [| witness] [| note].
  std::string str() const {
    std::string out;
    for (const auto& r : records) {
      out += r.law + " | " + r.inputs + " | " + (r.pass ? "PASS" : "FAIL");
      if (!r.witness.empty()) out += " | witness: " + r.witness;
      if (!r.note.empty()) out += " | " + r.note;
      out += "\n";
    }
    return out;
  }
};

// --------------------------------------------------------------- categories

struct Skel2Cat {
  using Obj = skelcat::Obj2;
  using Mor = skelcat::SkelMorphism2;
  static Obj source(const Mor& m) { return skelcat::source(m); }
  static Obj target(const Mor& m) { return skelcat::target(m); }
  static Mor compose(const Mor& g, const Mor& f) { return skelcat::compose2(g, f); }
  static Mor identity(const Obj& o) { return skelcat::identity2(o); }
  static bool orthogonal(const Mor& a, const Mor& b) { return skelcat::orthogonal2(a, b); }
  static bool is_cauchy(const Mor& m) { return skelcat::is_cauchy2(m); }
  static std::string str(const Obj& o) { return skelcat::to_string(o); }
  static std::string str(const Mor& m) { return skelcat::str(m); }
};

struct Skel1Cat {
  using Obj = skelcat::Obj1;
  using Mor = skelcat::SkelMorphism1;
  static Obj source(const Mor& m) { return skelcat::source(m); }
  static Obj target(const Mor& m) { return skelcat::target(m); }
  static Mor compose(const Mor& g, const Mor& f) { return skelcat::compose1(g, f); }
  static Mor identity(const Obj& o) { return skelcat::identity1(o); }
  static bool orthogonal(const Mor& a, const Mor& b) { return skelcat::orthogonal1(a, b); }
  static bool is_cauchy(const Mor& m) {
    if (const auto* f = std::get_if<skelcat::LineToLine>(&m)) return maps1d::is_surjective(f->map);
    return std::holds_alternative<skelcat::CircleToCircle>(m);
  }
  static std::string str(const Obj& o) { return skelcat::to_string(o); }
  static std::string str(const Mor& m) { return skelcat::str(m); }
};

struct C2DCat {
  using Obj = localization::C2DObject;
  using Mor = localization::C2DMorphism;
  static Obj source(const Mor& m) { return m.source; }
  static Obj target(const Mor& m) { return m.target; }
  static Mor compose(const Mor& g, const Mor& f) { return localization::compose_c2d(g, f); }
  static Mor identity(const Obj& o) { return localization::identity_c2d(o); }
  static bool orthogonal(const Mor& a, const Mor& b) { return localization::orthogonal_c2d(a, b); }
  static bool is_cauchy(const Mor& m) { return localization::is_cauchy_c2d(m); }
  static std::string str(const Obj& o) { return localization::str(o); }
  static std::string str(const Mor& m) {
    return localization::str(m.source) + " -> " + localization::str(m.target);
  }
};

/// Cone-union fragments and global maps restricted to them.
struct FragCat {
  using Obj = std::variant<geometry::ConeUnion, localization::Cylinder>;
  using Mor = localization::FragmentMorphism;
  static Obj source(const Mor& m) { return m.source; }
  static Obj target(const Mor& m) {
    if (const auto* c = std::get_if<localization::Cone>(&m.target)) return geometry::ConeUnion(c->dc);
    return localization::Cylinder{};
  }
  /// A fragment morphism is Cauchy when its development is invertible.
  static bool is_cauchy(const Mor& m) { return localization::is_cauchy_c2d(localization::d_localize(m)); }
  static std::string str(const Obj& o) {
    if (const auto* u = std::get_if<geometry::ConeUnion>(&o)) return u->str();
    return "M/Z";
  }
  static std::string str(const Mor& m) { return m.source.str() + " -> " + localization::str(m.target); }
};

// ------------------------------------------------------------------- models

template <class Cat, class Elem>
struct AQFTModel {
  using Obj = typename Cat::Obj;
  using Mor = typename Cat::Mor;

  std::string name;
  std::function<std::string(const Obj&)> on_object;  ///< label of the algebra
  std::function<Elem(const Mor&, const Elem&)> on_morphism;
  std::function<Elem(const Obj&, const Elem&, const Elem&)> product;
  std::function<Elem(const Obj&)> unit;
  std::function<Elem(const Elem&)> involution;
  std::function<Elem(const ComplexRational&, const Elem&)> scale;
  /// Exact models ignore the tolerance.
  std::function<bool(const Elem&, const Elem&, double)> equal;
  std::function<std::vector<Elem>(const Obj&)> generators;
  std::function<std::string(const Elem&)> show;
  /// Action of the inverse of a Cauchy morphism (optional).
  std::function<Elem(const Mor&, const Elem&)> inverse_on_morphism;
  /// Exact invariance under the opposite-chirality action at a 2d object (optional).
  std::function<bool(const Obj&, Sign, const Elem&)> invariant;
};

template <class C, class D>
struct OrthogonalFunctor {
  std::string name;
  std::function<typename D::Obj(const typename C::Obj&)> on_object;
  std::function<typename D::Mor(const typename C::Mor&)> on_morphism;
};

inline OrthogonalFunctor<Skel2Cat, Skel1Cat> pi_functor(Sign sign) {
  return {"pi" + skelcat::to_string(sign), [](const skelcat::Obj2& o) { return skelcat::pi_project(o); },
          [sign](const skelcat::SkelMorphism2& m) { return skelcat::pi_project(m, sign); }};
}

inline OrthogonalFunctor<Skel2Cat, C2DCat> inclusion_functor() {
  return {"j", [](const skelcat::Obj2& o) { return localization::include_object(o); },
          [](const skelcat::SkelMorphism2& m) { return localization::include_morphism(m); }};
}

inline OrthogonalFunctor<FragCat, C2DCat> development_functor() {
  return {"D",
          [](const FragCat::Obj& o) -> localization::C2DObject {
            if (const auto* u = std::get_if<geometry::ConeUnion>(&o)) {
              return localization::Cone{geometry::cauchy_development(*u)};
            }
            return localization::Cylinder{};
          },
          [](const localization::FragmentMorphism& f) { return localization::d_localize(f); }};
}

/// The composite A o F, evaluated lazily. The invariance predicate, when
/// given, replaces the one of the base model.
template <class C, class D, class Elem>
AQFTModel<C, Elem> pullback_model(const AQFTModel<D, Elem>& model, const OrthogonalFunctor<C, D>& F,
                                  std::function<bool(const typename C::Obj&, Sign, const Elem&)> invariant = {}) {
  AQFTModel<C, Elem> out;
  out.name = F.name + "*(" + model.name + ")";
  out.on_object = [model, F](const auto& x) { return model.on_object(F.on_object(x)); };
  out.on_morphism = [model, F](const auto& m, const Elem& a) { return model.on_morphism(F.on_morphism(m), a); };
  out.product = [model, F](const auto& x, const Elem& a, const Elem& b) {
    return model.product(F.on_object(x), a, b);
  };
  out.unit = [model, F](const auto& x) { return model.unit(F.on_object(x)); };
  out.involution = model.involution;
  out.scale = model.scale;
  out.equal = model.equal;
  out.generators = [model, F](const auto& x) { return model.generators(F.on_object(x)); };
  out.show = model.show;
  if (model.inverse_on_morphism) {
    out.inverse_on_morphism = [model, F](const auto& m, const Elem& a) {
      return model.inverse_on_morphism(F.on_morphism(m), a);
    };
  }
  out.invariant = std::move(invariant);
  return out;
}

/// pi_sign^* of a model on the 1d category. The opposite-chirality morphisms
/// embed_opposite(k, sign) project to identities, so every element is invariant.
template <class Elem>
AQFTModel<Skel2Cat, Elem> pullback_along_projection(const AQFTModel<Skel1Cat, Elem>& chiral, Sign sign) {
  return pullback_model<Skel2Cat, Skel1Cat, Elem>(chiral, pi_functor(sign),
                                                  [sign](const skelcat::Obj2&, Sign s, const Elem&) {
                                                    if (s != sign) {
                                                      throw PreconditionViolation("invariance asked for the other chirality");
                                                    }
                                                    return true;
                                                  });
}

/// One-dimensional algebra C with trivial action.
template <class Cat>
AQFTModel<Cat, ComplexRational> trivial_model() {
  using Obj = typename Cat::Obj;
  using Mor = typename Cat::Mor;
  AQFTModel<Cat, ComplexRational> m;
  m.name = "trivial";
  m.on_object = [](const Obj&) { return std::string("C"); };
  m.on_morphism = [](const Mor&, const ComplexRational& a) { return a; };
  m.product = [](const Obj&, const ComplexRational& a, const ComplexRational& b) { return a * b; };
  m.unit = [](const Obj&) { return ComplexRational(1); };
  m.involution = [](const ComplexRational& a) { return a.conj(); };
  m.scale = [](const ComplexRational& s, const ComplexRational& a) { return s * a; };
  m.equal = [](const ComplexRational& a, const ComplexRational& b, double) { return a == b; };
  m.generators = [](const Obj&) { return std::vector<ComplexRational>{ComplexRational(1), ComplexRational::i()}; };
  m.show = [](const ComplexRational& a) { return a.str(); };
  m.inverse_on_morphism = m.on_morphism;
  return m;
}

// --------------------------------------------------------------- law suites

namespace detail {

template <class Cat, class Elem>
std::optional<std::string> compare_elems(const AQFTModel<Cat, Elem>& model, const Elem& lhs, const Elem& rhs,
                                         double tol, const std::string& what) {
  if (model.equal(lhs, rhs, tol)) return std::nullopt;
  return what + ": " + model.show(lhs) + " != " + model.show(rhs);
}

}  // namespace detail

/// For each pair (g, f): A(g o f) = A(g) A(f), A(f) unital and multiplicative on
/// sampled generators, and A(id) = id.
template <class Cat, class Elem>
Report check_functoriality(const AQFTModel<Cat, Elem>& model,
                           const std::vector<std::pair<typename Cat::Mor, typename Cat::Mor>>& pairs,
                           double tol = 1e-9) {
  Report report;
  for (const auto& [g, f] : pairs) {
    Record rec{"functoriality", Cat::str(g) + " o " + Cat::str(f)};
    auto fail = [&](std::string w) {
      if (rec.pass) rec.witness = std::move(w);
      rec.pass = false;
    };
    const auto src = Cat::source(f);
    const auto gf = Cat::compose(g, f);
    const auto id = Cat::identity(src);
    const auto gens = model.generators(src);
    for (const auto& a : gens) {
      const Elem fa = model.on_morphism(f, a);
      if (auto w = detail::compare_elems(model, model.on_morphism(gf, a), model.on_morphism(g, fa), tol,
                                         "composition at " + model.show(a))) {
        fail(*w);
      }
      if (auto w = detail::compare_elems(model, model.on_morphism(id, a), a, tol, "identity")) fail(*w);
    }
    if (auto w = detail::compare_elems(model, model.on_morphism(f, model.unit(src)), model.unit(Cat::target(f)),
                                       tol, "unit")) {
      fail(*w);
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const Elem lhs = model.on_morphism(f, model.product(src, gens[i], gens[j]));
        const Elem rhs = model.product(Cat::target(f), model.on_morphism(f, gens[i]), model.on_morphism(f, gens[j]));
        if (auto w = detail::compare_elems(model, lhs, rhs, tol, "product")) fail(*w);
      }
    }
    report.add(std::move(rec));
  }
  return report;
}

/// A(f1) a and A(f2) b commute for sampled generators a, b.
template <class Cat, class Elem>
Report check_einstein_causality(const AQFTModel<Cat, Elem>& model,
                                const std::vector<std::pair<typename Cat::Mor, typename Cat::Mor>>& pairs,
                                double tol = 1e-9) {
  Report report;
  for (const auto& [f1, f2] : pairs) {
    Record rec{"einstein-causality", Cat::str(f1) + " , " + Cat::str(f2)};
    const auto tgt = Cat::target(f1);
    for (const auto& a : model.generators(Cat::source(f1))) {
      for (const auto& b : model.generators(Cat::source(f2))) {
        const Elem fa = model.on_morphism(f1, a);
        const Elem fb = model.on_morphism(f2, b);
        const Elem ab = model.product(tgt, fa, fb);
        const Elem ba = model.product(tgt, fb, fa);
        if (rec.pass && !model.equal(ab, ba, tol)) {
          rec.pass = false;
          rec.witness = "[" + model.show(fa) + " , " + model.show(fb) + "] = " +
                        model.show(ab + model.scale(ComplexRational(-1), ba));
        }
      }
    }
    report.add(std::move(rec));
  }
  return report;
}

/// A(f) has a two-sided inverse on generators, built from the inverse maps.
/// Throws PreconditionViolation for a non-Cauchy morphism.
template <class Cat, class Elem>
Report check_time_slice(const AQFTModel<Cat, Elem>& model, const std::vector<typename Cat::Mor>& morphisms,
                        double tol = 1e-9) {
  Report report;
  for (const auto& f : morphisms) {
    if (!Cat::is_cauchy(f)) throw PreconditionViolation("time-slice check given a non-Cauchy morphism " + Cat::str(f));
    Record rec{"time-slice", Cat::str(f)};
    if (!model.inverse_on_morphism) {
      rec.pass = false;
      rec.witness = "model provides no inverse action";
      report.add(std::move(rec));
      continue;
    }
    for (const auto& a : model.generators(Cat::source(f))) {
      if (auto w = detail::compare_elems(model, model.inverse_on_morphism(f, model.on_morphism(f, a)), a, tol,
                                         "left inverse");
          w && rec.pass) {
        rec.pass = false;
        rec.witness = *w;
      }
    }
    for (const auto& b : model.generators(Cat::target(f))) {
      if (auto w = detail::compare_elems(model, model.on_morphism(f, model.inverse_on_morphism(f, b)), b, tol,
                                         "right inverse");
          w && rec.pass) {
        rec.pass = false;
        rec.witness = *w;
      }
    }
    report.add(std::move(rec));
  }
  return report;
}

/// f1 _|_ f2 iff F f1 _|_ F f2.
template <class C, class D>
Report check_orthogonality_reflection(const OrthogonalFunctor<C, D>& F,
                                      const std::vector<std::pair<typename C::Mor, typename C::Mor>>& pairs) {
  Report report;
  for (const auto& [f1, f2] : pairs) {
    const bool before = C::orthogonal(f1, f2);
    const bool after = D::orthogonal(F.on_morphism(f1), F.on_morphism(f2));
    Record rec{"orthogonality-reflection(" + F.name + ")", C::str(f1) + " , " + C::str(f2)};
    if (before != after) {
      rec.pass = false;
      rec.witness = std::string("source says ") + (before ? "orthogonal" : "not orthogonal") + ", image says " +
                    (after ? "orthogonal" : "not orthogonal");
    }
    report.add(std::move(rec));
  }
  return report;
}

/// A 2d morphism projecting to h under pi_sign: h in the sign slot and the
/// identity (or, for a line-to-circle map, a unit-width chart) in the other.
inline skelcat::SkelMorphism2 lift_to_plane(const skelcat::SkelMorphism1& h, Sign sign) {
  if (const auto* f = std::get_if<skelcat::LineToCircle>(&h)) {
    const auto other = maps1d::chart_onto(geometry::Interval(0, ratio(1, 2)));
    return sign == Sign::Plus ? skelcat::make_mto_cyl(f->map.base(), other)
                              : skelcat::make_mto_cyl(other, f->map.base());
  }
  return skelcat::embed_in_slot(h, sign);
}

/// Pulls the chiral model back along pi_sign and extracts invariants with the
/// pulled-back model's invariance predicate (or `invariant_override`); the
/// result must coincide with the chiral model on objects, generators and the
/// sampled morphisms.
template <class Elem>
Report check_unit_identity(const AQFTModel<Skel1Cat, Elem>& chiral, Sign sign,
                           const std::vector<skelcat::SkelMorphism1>& morphisms,
                           std::function<bool(const skelcat::Obj2&, Sign, const Elem&)> invariant_override = {}) {
  using skelcat::Obj1;
  using skelcat::Obj2;
  auto pulled = pullback_along_projection(chiral, sign);
  if (invariant_override) pulled.invariant = invariant_override;
  Report report;
  const std::string tag = "unit-identity(" + skelcat::to_string(sign) + ")";
  for (const Obj2 lift : {Obj2::Minkowski, Obj2::Cylinder}) {
    const Obj1 x = skelcat::pi_project(lift);
    Record obj{tag, "object " + skelcat::to_string(x)};
    if (pulled.on_object(lift) != chiral.on_object(x)) {
      obj.pass = false;
      obj.witness = pulled.on_object(lift) + " != " + chiral.on_object(x);
    }
    report.add(std::move(obj));

    std::vector<Elem> invariants;
    for (const auto& g : pulled.generators(lift)) {
      if (pulled.invariant(lift, sign, g)) invariants.push_back(g);
    }
    const auto expected = chiral.generators(x);
    Record gens{tag, "generators " + skelcat::to_string(x)};
    if (invariants.size() != expected.size()) {
      gens.pass = false;
      gens.witness = std::to_string(invariants.size()) + " invariant generators, expected " +
                     std::to_string(expected.size());
    } else {
      for (std::size_t i = 0; i < expected.size() && gens.pass; ++i) {
        if (!chiral.equal(invariants[i], expected[i], 0.0)) {
          gens.pass = false;
          gens.witness = chiral.show(invariants[i]) + " != " + chiral.show(expected[i]);
        }
      }
    }
    report.add(std::move(gens));
  }
  for (const auto& h : morphisms) {
    Record rec{tag, "morphism " + skelcat::str(h)};
    const auto lifted = lift_to_plane(h, sign);
    const auto lifted_src = skelcat::source(lifted);
    if (!(skelcat::pi_project(lifted, sign) == h)) {
      rec.pass = false;
      rec.witness = "projection of the lift differs: " + skelcat::str(skelcat::pi_project(lifted, sign));
    }
    for (const auto& g : chiral.generators(skelcat::source(h))) {
      if (!rec.pass) break;
      if (!pulled.invariant(lifted_src, sign, g)) continue;
      const Elem lhs = pulled.on_morphism(lifted, g);
      const Elem rhs = chiral.on_morphism(h, g);
      if (!chiral.equal(lhs, rhs, 0.0)) {
        rec.pass = false;
        rec.witness = chiral.show(lhs) + " != " + chiral.show(rhs);
      }
    }
    report.add(std::move(rec));
  }
  return report;
}

struct ChiralityVerdict {
  bool chiral = true;
  bool low_confidence = false;
  std::string witness;

  std::string str() const {
    if (!chiral) return "NOT_CHIRAL(" + witness + ")";
    return low_confidence ? "CHIRAL (LOW-CONFIDENCE)" : "CHIRAL";
  }
};

/// NOT_CHIRAL when some generator is moved by A(embed_opposite(k, sign)) for a
/// witness k; CHIRAL when every sampled generator is fixed.
template <class Elem>
ChiralityVerdict counit_and_chirality(const AQFTModel<Skel2Cat, Elem>& model, Sign sign,
                                      const std::vector<skelcat::SkelMorphism1>& witnesses) {
  ChiralityVerdict v;
  std::size_t probes = 0;
  for (const auto o : {skelcat::Obj2::Minkowski, skelcat::Obj2::Cylinder}) {
    const auto gens = model.generators(o);
    for (const auto& k : witnesses) {
      if (skelcat::source(k) != skelcat::pi_project(o) || skelcat::target(k) != skelcat::pi_project(o)) continue;
      const auto m = skelcat::embed_opposite(k, sign);
      for (const auto& g : gens) {
        ++probes;
        const Elem moved = model.on_morphism(m, g);
        if (!model.equal(moved, g, 0.0)) {
          v.chiral = false;
          v.witness = model.show(g) + " moved by " + skelcat::str(m) + " to " + model.show(moved);
          return v;
        }
      }
    }
  }
  v.low_confidence = probes == 0;
  return v;
}

}  // namespace chiralkit::aqft
