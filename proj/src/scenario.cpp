#include "chiralkit/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "chiralkit/aqft.hpp"
#include "chiralkit/current/models.hpp"
#include "chiralkit/errors.hpp"
#include "chiralkit/localization.hpp"
#include "chiralkit/random.hpp"
#include "chiralkit/sampling.hpp"
#include "chiralkit/zigzag.hpp"

namespace chiralkit::scenario {

using current::CircleFn;
using current::LineFn;
using current::Observable;
using current::SlotFn;
using geometry::Interval;
using maps1d::CircleMapLift;
using maps1d::MobiusMatrix;
using maps1d::PiecewiseMobius;
using skelcat::Obj2;
using skelcat::Sign;

namespace {

[[noreturn]] void fail_at(const YAML::Node& n, const std::string& msg) {
  const auto m = n.Mark();
  if (m.line >= 0) throw ScenarioError("line " + std::to_string(m.line + 1) + ": " + msg);
  throw ScenarioError(msg);
}

std::string scalar(const YAML::Node& n, const std::string& what) {
  if (!n || !n.IsScalar()) fail_at(n, what + " must be a scalar");
  return n.Scalar();
}

Rational rational(const YAML::Node& n) {
  const std::string s = scalar(n, "rational");
  try {
    return parse_rational(s);
  } catch (const std::exception&) {
    fail_at(n, "bad rational literal '" + s + "'");
  }
}

std::vector<Rational> rationals(const YAML::Node& n, std::size_t min, std::size_t max) {
  if (!n || !n.IsSequence() || n.size() < min || n.size() > max) {
    fail_at(n, "expected a list of " + std::to_string(min) + (min == max ? "" : " to " + std::to_string(max)) +
                   " rationals");
  }
  std::vector<Rational> out;
  for (const auto& x : n) out.push_back(rational(x));
  return out;
}

Interval interval(const YAML::Node& n) {
  if (!n || !n.IsSequence() || n.size() != 2) fail_at(n, "an interval is a two-element list");
  try {
    return Interval::parse(scalar(n[0], "endpoint"), scalar(n[1], "endpoint"));
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    fail_at(n, std::string("bad interval: ") + e.what());
  }
}

Sign sign_of(const YAML::Node& n) {
  const std::string s = n ? scalar(n, "sign") : "+";
  if (s == "+" || s == "plus") return Sign::Plus;
  if (s == "-" || s == "minus") return Sign::Minus;
  fail_at(n, "sign must be + or -");
}

template <class T>
const T& lookup(const std::map<std::string, T>& table, const YAML::Node& n, const std::string& what) {
  const std::string name = scalar(n, what + " name");
  const auto it = table.find(name);
  if (it == table.end()) fail_at(n, "unknown " + what + " '" + name + "'");
  return it->second;
}

// ------------------------------------------------------------------- parsers

class Parser {
 public:
  Definitions defs;

  void parse_all(const YAML::Node& root) {
    section(root, "maps", [&](const std::string& k, const YAML::Node& v) { defs.maps.emplace(k, map(v)); });
    section(root, "lifts", [&](const std::string& k, const YAML::Node& v) { defs.lifts.emplace(k, lift(v)); });
    section(root, "morphisms",
            [&](const std::string& k, const YAML::Node& v) { defs.morphisms.emplace(k, morphism(v)); });
    section(root, "morphisms1",
            [&](const std::string& k, const YAML::Node& v) { defs.morphisms1.emplace(k, morphism1(v)); });
    section(root, "functions",
            [&](const std::string& k, const YAML::Node& v) { defs.functions.emplace(k, function(v)); });
    section(root, "observables",
            [&](const std::string& k, const YAML::Node& v) { defs.observables.emplace(k, observable(v)); });
  }

  PiecewiseMobius map(const YAML::Node& n) {
    if (n.IsScalar()) {
      if (n.Scalar() == "identity") return PiecewiseMobius::identity();
      return lookup(defs.maps, n, "map");
    }
    if (!n.IsMap()) fail_at(n, "a map is a name or a mapping");
    try {
      if (n["translation"]) return PiecewiseMobius::translation(rational(n["translation"]));
      if (n["affine"]) {
        const auto v = rationals(n["affine"], 2, 2);
        if (sgn(v[0]) <= 0) fail_at(n, "affine slope must be positive");
        return PiecewiseMobius::affine(v[0], v[1]);
      }
      if (n["chart_onto"]) return maps1d::chart_onto(interval(n["chart_onto"]));
      if (n["pl"]) {
        const auto& p = n["pl"];
        const Interval target = p["target"] ? interval(p["target"]) : Interval::whole_line();
        return maps1d::pl_core_embedding(rationals(p["knots"], 2, 64), rationals(p["values"], 2, 64), target);
      }
      if (n["pieces"]) return pieces_map(n["pieces"]);
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& e) {
      fail_at(n, std::string("invalid map: ") + e.what());
    }
    fail_at(n, "a map needs one of translation, affine, chart_onto, pl, pieces");
  }

  CircleMapLift lift(const YAML::Node& n) {
    if (n.IsScalar()) {
      if (n.Scalar() == "identity") return CircleMapLift::identity();
      return lookup(defs.lifts, n, "lift");
    }
    try {
      if (n["rotation"]) return CircleMapLift::rotation(rational(n["rotation"]));
      if (n["pl"]) return sampling::pl_lift(rationals(n["pl"]["knots"], 1, 64), rationals(n["pl"]["values"], 1, 64));
      if (n["pieces"]) {
        std::vector<Rational> breaks;
        std::vector<MobiusMatrix> mats;
        for (const auto& e : n["pieces"]) {
          breaks.push_back(interval(e["cell"]).lo().value());
          const auto m = rationals(e["matrix"], 4, 4);
          mats.push_back({m[0], m[1], m[2], m[3]});
        }
        if (breaks.size() == 1) breaks.clear();
        CircleMapLift g(std::move(breaks), std::move(mats));
        if (auto defect = maps1d::validate(g)) fail_at(n, "invalid lift: " + *defect);
        return g;
      }
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& e) {
      fail_at(n, std::string("invalid lift: ") + e.what());
    }
    fail_at(n, "a lift needs one of rotation, pl, pieces");
  }

  skelcat::SkelMorphism2 morphism(const YAML::Node& n) {
    if (n.IsScalar()) return lookup(defs.morphisms, n, "morphism");
    const std::string kind = scalar(n["kind"], "kind");
    try {
      if (kind == "MtoM") return skelcat::MtoM{map(n["plus"]), map(n["minus"])};
      if (kind == "MtoCyl") return skelcat::make_mto_cyl(map(n["plus"]), map(n["minus"]));
      if (kind == "CylToCyl") return skelcat::CylToCyl{lift(n["plus"]), lift(n["minus"])};
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& e) {
      fail_at(n, std::string("invalid morphism: ") + e.what());
    }
    fail_at(n["kind"], "kind must be MtoM, MtoCyl or CylToCyl");
  }

  skelcat::SkelMorphism1 morphism1(const YAML::Node& n) {
    if (n.IsScalar()) return lookup(defs.morphisms1, n, "1d morphism");
    const std::string kind = scalar(n["kind"], "kind");
    try {
      if (kind == "LineToLine") return skelcat::LineToLine{map(n["map"])};
      if (kind == "LineToCircle") return skelcat::make_line_to_circle(map(n["map"]));
      if (kind == "CircleToCircle") return skelcat::CircleToCircle{lift(n["map"])};
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& e) {
      fail_at(n, std::string("invalid morphism: ") + e.what());
    }
    fail_at(n["kind"], "kind must be LineToLine, LineToCircle or CircleToCircle");
  }

  SlotFn function(const YAML::Node& n) {
    if (n.IsScalar()) {
      if (n.Scalar() == "zero") return LineFn{};
      return lookup(defs.functions, n, "function");
    }
    try {
      if (n["triangle"]) {
        const auto v = rationals(n["triangle"], 3, 4);
        return LineFn::triangle(v[0], v[1], v[2], v.size() > 3 ? v[3] : Rational(1));
      }
      if (n["indicator"]) {
        const auto v = rationals(n["indicator"], 2, 3);
        return LineFn::indicator(v[0], v[1], v.size() > 2 ? v[2] : Rational(1));
      }
      if (n["bump"]) {
        const auto v = rationals(n["bump"], 2, 3);
        return LineFn::quartic_bump(v[0], v[1], v.size() > 2 ? v[2] : Rational(1));
      }
      if (n["constant"]) return CircleFn(rational(n["constant"]));
      if (n["fold"]) {
        const SlotFn inner = function(n["fold"]);
        const auto* f = std::get_if<LineFn>(&inner);
        if (!f) fail_at(n, "fold needs a line function");
        return CircleFn::fold(*f);
      }
      if (n["pieces"]) {
        std::vector<Rational> knots;
        std::vector<current::Polynomial> polys;
        for (const auto& e : n["pieces"]) {
          const Interval c = interval(e["cell"]);
          if (!c.is_bounded()) fail_at(e, "function cells must be bounded");
          if (!knots.empty() && knots.back() != c.lo().value()) fail_at(e, "function cells must be contiguous");
          if (knots.empty()) knots.push_back(c.lo().value());
          knots.push_back(c.hi().value());
          polys.emplace_back(rationals(e["coeffs"], 0, 64));
        }
        if (n["periodic"] && n["periodic"].as<bool>()) return CircleFn(std::move(knots), std::move(polys));
        return LineFn(std::move(knots), std::move(polys));
      }
    } catch (const ScenarioError&) {
      throw;
    } catch (const std::exception& e) {
      fail_at(n, std::string("invalid function: ") + e.what());
    }
    fail_at(n, "a function needs one of triangle, indicator, bump, constant, fold, pieces");
  }

  Observable observable(const YAML::Node& n) {
    if (n.IsScalar()) return lookup(defs.observables, n, "observable");
    const std::string amb = scalar(n["ambient"], "ambient");
    Obj2 ambient;
    if (amb == "M") {
      ambient = Obj2::Minkowski;
    } else if (amb == "M/Z") {
      ambient = Obj2::Cylinder;
    } else {
      fail_at(n["ambient"], "ambient must be M or M/Z");
    }
    auto slot = [&](const char* key) -> SlotFn {
      if (!n[key] || (n[key].IsScalar() && n[key].Scalar() == "zero")) {
        return ambient == Obj2::Minkowski ? SlotFn(LineFn{}) : SlotFn(CircleFn{});
      }
      SlotFn f = function(n[key]);
      if (ambient == Obj2::Cylinder) {
        if (const auto* l = std::get_if<LineFn>(&f)) return CircleFn::fold(*l);
      }
      return f;
    };
    try {
      return {ambient, slot("plus"), slot("minus")};
    } catch (const AmbientMismatch& e) {
      fail_at(n, e.what());
    }
  }

 private:
  static void section(const YAML::Node& root, const char* key,
                      const std::function<void(const std::string&, const YAML::Node&)>& each) {
    const YAML::Node s = root[key];
    if (!s) return;
    if (!s.IsMap()) fail_at(s, std::string(key) + " must be a mapping of names");
    for (const auto& kv : s) each(kv.first.as<std::string>(), kv.second);
  }

  PiecewiseMobius pieces_map(const YAML::Node& list) {
    if (!list.IsSequence() || list.size() == 0) fail_at(list, "pieces must be a nonempty list");
    std::vector<Rational> breaks;
    std::vector<MobiusMatrix> mats;
    ExtendedRational prev_hi = ExtendedRational::neg_inf();
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Interval c = interval(list[i]["cell"]);
      if (c.lo() != prev_hi) fail_at(list[i], "cells must tile the line in order");
      if (i) breaks.push_back(c.lo().value());
      prev_hi = c.hi();
      const auto m = rationals(list[i]["matrix"], 4, 4);
      mats.push_back({m[0], m[1], m[2], m[3]});
    }
    if (!prev_hi.is_pos_inf()) fail_at(list, "cells must tile the line in order");
    PiecewiseMobius f(Interval::whole_line(), std::move(breaks), std::move(mats));
    if (auto defect = maps1d::validate(f)) fail_at(list, "invalid map: " + *defect);
    return maps1d::canonicalize(f);
  }
};

YAML::Node load_yaml(const std::string& text) {
  try {
    return YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ScenarioError(std::string("parse error: ") + e.what());
  }
}

// ------------------------------------------------------------------- models

struct ModelSpec {
  std::string kind = "current";  // current, trivial, chiral_pullback
  std::optional<current::Corruption> corruption;
  Sign sign = Sign::Plus;
};

ModelSpec model_spec(const YAML::Node& n) {
  ModelSpec m;
  if (n.IsScalar()) {
    m.kind = n.Scalar();
  } else {
    m.kind = scalar(n["kind"], "model kind");
    if (n["sign"]) m.sign = sign_of(n["sign"]);
    if (n["corruption"]) {
      const std::string c = scalar(n["corruption"], "corruption");
      if (c == "sign_flip") {
        m.corruption = current::Corruption::SignFlip;
      } else if (c == "constant_tau") {
        m.corruption = current::Corruption::ConstantTau;
      } else if (c == "wrong_inverse") {
        m.corruption = current::Corruption::WrongInverse;
      } else {
        fail_at(n["corruption"], "unknown corruption '" + c + "'");
      }
    }
  }
  if (m.kind != "current" && m.kind != "trivial" && m.kind != "chiral_pullback") {
    fail_at(n, "unknown model kind '" + m.kind + "'");
  }
  return m;
}

template <class F>
auto with_model(const ModelSpec& spec, F&& f) {
  if (spec.kind == "trivial") return f(aqft::trivial_model<aqft::Skel2Cat>());
  if (spec.kind == "chiral_pullback") {
    return f(aqft::pullback_along_projection(current::chiral_component_model(spec.sign), spec.sign));
  }
  if (spec.corruption) return f(current::corrupted_current_model(*spec.corruption));
  return f(current::current_model());
}

// --------------------------------------------------------------- directives

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;
};

class Runner {
 public:
  Runner(const YAML::Node& root, Parser& parser, std::uint64_t seed, std::optional<double> tol)
      : root_(root), p_(parser), seed_(seed), tol_override_(tol) {
    if (root["models"]) {
      if (!root["models"].IsMap()) fail_at(root["models"], "models must be a mapping of names");
      for (const auto& kv : root["models"]) models_.emplace(kv.first.as<std::string>(), model_spec(kv.second));
    }
    if (root["tolerance"]) default_tol_ = root["tolerance"].as<double>();
  }

  /// Resolves every directive before anything runs, so that name errors exit with 2.
  std::vector<std::function<Outcome()>> prepare() {
    std::vector<std::function<Outcome()>> out;
    const YAML::Node list = root_["directives"];
    if (!list) return out;
    if (!list.IsSequence()) fail_at(list, "directives must be a list");
    for (std::size_t i = 0; i < list.size(); ++i) out.push_back(directive(list[i], i));
    return out;
  }

 private:
  double tolerance(const YAML::Node& d) const {
    if (tol_override_) return *tol_override_;
    if (d["tolerance"]) return d["tolerance"].as<double>();
    return default_tol_;
  }

  Rng rng_for(std::size_t index) const { return Rng(seed_ * 0x9E3779B97F4A7C15ULL + index + 1); }

  ModelSpec model(const YAML::Node& d) const {
    if (!d["model"]) return {};
    if (d["model"].IsMap()) return model_spec(d["model"]);
    const std::string name = scalar(d["model"], "model name");
    const auto it = models_.find(name);
    if (it != models_.end()) return it->second;
    return model_spec(d["model"]);
  }

  std::size_t count(const YAML::Node& d, const char* key, std::size_t fallback) const {
    if (!d[key]) return fallback;
    const long n = d[key].as<long>();
    if (n < 0) fail_at(d[key], std::string(key) + " must be non-negative");
    return static_cast<std::size_t>(n);
  }

  std::vector<sampling::Pair2> pairs(const YAML::Node& d) {
    std::vector<sampling::Pair2> out;
    if (!d["pairs"]) return out;
    for (const auto& pr : d["pairs"]) {
      if (!pr.IsSequence() || pr.size() != 2) fail_at(pr, "a pair is a two-element list");
      auto first = p_.morphism(pr[0]);
      out.emplace_back(std::move(first), p_.morphism(pr[1]));
    }
    return out;
  }

  static Outcome from_report(const aqft::Report& r, bool expect_fail, const std::string& what) {
    Outcome o;
    const bool ok = r.passed();
    o.pass = ok != expect_fail;
    o.summary = what + ": " + std::to_string(r.records.size() - r.failures()) + "/" +
                std::to_string(r.records.size()) + " records pass" + (expect_fail ? " (failure expected)" : "");
    std::size_t shown = 0;
    for (const auto& rec : r.records) {
      // An expected failure only needs one witness.
      if (rec.pass || shown == (o.pass ? 1u : 5u)) continue;
      ++shown;
      aqft::Report one;
      one.add(rec);
      auto line = one.str();
      line.pop_back();
      o.details.push_back(line);
    }
    return o;
  }

  static bool expect_fail(const YAML::Node& d) {
    return d["expect"] && d["expect"].IsScalar() && d["expect"].Scalar() == "fail";
  }

  std::function<Outcome()> directive(const YAML::Node& d, std::size_t index) {
    if (!d.IsMap()) fail_at(d, "a directive is a mapping");
    const std::string check = scalar(d["check"], "check");
    const double tol = tolerance(d);
    const bool neg = expect_fail(d);

    if (check == "functoriality" || check == "einstein_causality") {
      const ModelSpec spec = model(d);
      auto given = pairs(d);
      const std::size_t n = count(d, "random", given.empty() ? 20 : 0);
      const bool causal = check == "einstein_causality";
      return [=, this]() {
        Rng rng = rng_for(index);
        auto all = given;
        auto extra = causal ? sampling::orthogonal_pairs(rng, n) : sampling::composable_pairs(rng, n);
        all.insert(all.end(), extra.begin(), extra.end());
        return with_model(spec, [&](const auto& m) {
          const auto r = causal ? aqft::check_einstein_causality(m, all, tol) : aqft::check_functoriality(m, all, tol);
          return from_report(r, neg, check + "(" + m.name + ")");
        });
      };
    }
    if (check == "time_slice") {
      const ModelSpec spec = model(d);
      std::vector<skelcat::SkelMorphism2> given;
      if (d["morphisms"]) {
        for (const auto& m : d["morphisms"]) given.push_back(p_.morphism(m));
      }
      const std::size_t n = count(d, "random", given.empty() ? 20 : 0);
      return [=, this]() {
        Rng rng = rng_for(index);
        auto all = given;
        auto extra = sampling::cauchy_morphisms(rng, n);
        all.insert(all.end(), extra.begin(), extra.end());
        return with_model(spec, [&](const auto& m) {
          try {
            return from_report(aqft::check_time_slice(m, all, tol), neg, "time_slice(" + m.name + ")");
          } catch (const PreconditionViolation& e) {
            return Outcome{neg, std::string("time_slice: precondition violated: ") + e.what(), {}};
          }
        });
      };
    }
    if (check == "unit_identity") {
      const Sign sign = sign_of(d["sign"]);
      const std::size_t n = count(d, "random", 12);
      const bool corrupt = d["corrupt_invariance"] && d["corrupt_invariance"].as<bool>();
      return [=, this]() {
        Rng rng = rng_for(index);
        std::vector<skelcat::SkelMorphism1> hs;
        for (std::size_t i = 0; i < n; ++i) {
          const auto src = i % 3 == 2 ? skelcat::Obj1::Circle : skelcat::Obj1::Line;
          const auto tgt = i % 3 == 0 ? skelcat::Obj1::Line : skelcat::Obj1::Circle;
          hs.push_back(sampling::random_morphism1(rng, src, tgt));
        }
        std::function<bool(const Obj2&, Sign, const current::ChiralElem&)> bad;
        if (corrupt) {
          bad = [](const Obj2&, Sign, const current::ChiralElem& e) {
            for (const auto& [w, c] : e.terms()) {
              for (const auto& l : w) {
                if (std::holds_alternative<current::Zeta>(l)) return false;
              }
            }
            return true;
          };
        }
        const auto r = aqft::check_unit_identity(current::chiral_component_model(sign), sign, hs, bad);
        return from_report(r, neg, "unit_identity(" + skelcat::to_string(sign) + ")");
      };
    }
    if (check == "chirality") {
      const ModelSpec spec = model(d);
      const Sign sign = sign_of(d["sign"]);
      const std::size_t n = count(d, "witnesses", 20);
      const std::string expect = d["expect"] ? scalar(d["expect"], "expect") : "";
      if (!expect.empty() && expect != "CHIRAL" && expect != "NOT_CHIRAL") {
        fail_at(d["expect"], "expect must be CHIRAL or NOT_CHIRAL");
      }
      return [=, this]() {
        Rng rng = rng_for(index);
        const auto ws = sampling::chirality_witnesses(rng, n);
        return with_model(spec, [&](const auto& m) {
          const auto v = aqft::counit_and_chirality(m, sign, ws);
          Outcome o;
          const std::string got = v.chiral ? "CHIRAL" : "NOT_CHIRAL";
          o.pass = expect.empty() || expect == got;
          o.summary = "chirality(" + m.name + ", " + skelcat::to_string(sign) + "): " + v.str();
          return o;
        });
      };
    }
    if (check == "orthogonality") {
      std::vector<std::function<bool()>> tests;
      std::vector<std::string> labels;
      if (!d["pairs"]) fail_at(d, "orthogonality needs pairs");
      for (const auto& pr : d["pairs"]) {
        if (!pr.IsSequence() || pr.size() != 2) fail_at(pr, "a pair is a two-element list");
        labels.push_back(scalar(pr[0], "name") + " , " + scalar(pr[1], "name"));
        const std::string a = pr[0].Scalar();
        if (p_.defs.morphisms1.count(a)) {
          auto m1 = p_.morphism1(pr[0]);
          auto m2 = p_.morphism1(pr[1]);
          tests.push_back([m1, m2]() { return skelcat::orthogonal1(m1, m2); });
        } else {
          auto m1 = p_.morphism(pr[0]);
          auto m2 = p_.morphism(pr[1]);
          tests.push_back([m1, m2]() { return skelcat::orthogonal2(m1, m2); });
        }
      }
      std::vector<bool> expect;
      if (d["expect"]) {
        for (const auto& e : d["expect"]) expect.push_back(e.as<bool>());
        if (expect.size() != tests.size()) fail_at(d["expect"], "one expected verdict per pair");
      }
      return [=]() {
        Outcome o;
        std::string verdicts;
        for (std::size_t i = 0; i < tests.size(); ++i) {
          bool v = false;
          try {
            v = tests[i]();
          } catch (const SourceTargetMismatch& e) {
            o.pass = false;
            o.details.push_back(labels[i] + ": " + e.what());
            continue;
          }
          verdicts += (i ? "/" : "") + std::string(v ? "true" : "false");
          if (!expect.empty() && expect[i] != v) {
            o.pass = false;
            o.details.push_back(labels[i] + ": got " + (v ? "true" : "false"));
          }
        }
        o.summary = "orthogonality: " + verdicts;
        return o;
      };
    }
    if (check == "commutator" || check == "tau") {
      const Observable a = p_.observable(d["a"]);
      const Observable b = p_.observable(d["b"]);
      const std::string expect = d["expect"] ? scalar(d["expect"], "expect") : "";
      return [=]() {
        Outcome o;
        std::string got;
        try {
          if (check == "tau") {
            got = to_string(current::poisson_tau(a, b));
          } else {
            const auto wa = current::Elem2::generator(a);
            const auto wb = current::Elem2::generator(b);
            const auto c = current::commutator(wa, wb, current::poisson_tau);
            if (c.is_zero()) {
              got = "0";
            } else if (c.terms().size() == 1 && c.terms().begin()->first.empty()) {
              got = c.terms().begin()->second.str();
            } else {
              got = c.str([](const Observable& x) { return "W[" + x.str() + "]"; });
            }
          }
        } catch (const AmbientMismatch& e) {
          return Outcome{false, check + ": " + e.what(), {}};
        }
        o.pass = expect.empty() || expect == got;
        o.summary = check + ": " + got;
        return o;
      };
    }
    if (check == "reflection") {
      const std::string functor = d["functor"] ? scalar(d["functor"], "functor") : "inclusion";
      if (functor != "inclusion" && functor != "pi+" && functor != "pi-") {
        fail_at(d["functor"], "functor must be inclusion, pi+ or pi-");
      }
      auto given = pairs(d);
      const std::size_t n = count(d, "random", given.empty() ? 100 : 0);
      const std::string expect = d["expect"] ? scalar(d["expect"], "expect") : "holds";
      return [=, this]() {
        Rng rng = rng_for(index);
        auto ps = given;
        const auto extra = sampling::cotarget_pairs(rng, n);
        ps.insert(ps.end(), extra.begin(), extra.end());
        const auto r = functor == "inclusion"
                           ? aqft::check_orthogonality_reflection(aqft::inclusion_functor(), ps)
                           : aqft::check_orthogonality_reflection(
                                 aqft::pi_functor(functor == "pi+" ? Sign::Plus : Sign::Minus), ps);
        auto o = from_report(r, expect == "violated", "reflection(" + functor + ")");
        return o;
      };
    }
    if (check == "zigzag") {
      const std::size_t n = count(d, "random", 5);
      const std::size_t chains = count(d, "chains", 2);
      return [=, this]() {
        Rng rng = rng_for(index);
        Outcome o;
        std::size_t done = 0;
        auto bounded = [&](long lo, long hi) {
          Interval i = sampling::random_interval(rng, lo, hi, 8);
          if (i.length() > 1) i = Interval(i.lo(), Rational(i.lo().value() + 1));
          return maps1d::BoundedLineEmbedding(sampling::random_embedding(rng, i));
        };
        while (done < n) {
          const auto h = bounded(-1, 1);
          const auto f = bounded(-1, 1);
          const auto g = bounded(-1, 1);
          if (!f.image().meets(g.image())) continue;
          ++done;
          const auto cells = zigzag::check_zigzag(zigzag::build_zigzag(h, f, g));
          if (!zigzag::commutes(cells)) {
            o.pass = false;
            o.details.push_back("zig-zag " + std::to_string(done) + " does not commute");
          }
        }
        std::size_t links = 0;
        for (std::size_t c = 0; c < chains; ++c) {
          const auto h = bounded(-1, 1);
          const auto f = bounded(-2, 0);
          auto g = bounded(1, 3);
          for (const auto& z : zigzag::connect_chain(h, f, g)) {
            ++links;
            if (!zigzag::commutes(zigzag::check_zigzag(z))) {
              o.pass = false;
              o.details.push_back("chain " + std::to_string(c + 1) + " has a non-commuting link");
            }
          }
        }
        o.summary = "zigzag: " + std::to_string(n) + " diagrams, " + std::to_string(chains) + " chains (" +
                    std::to_string(links) + " links)";
        return o;
      };
    }
    if (check == "d_naturality") {
      const std::size_t n = count(d, "random", 10);
      return [=, this]() {
        Rng rng = rng_for(index);
        Outcome o;
        std::size_t done = 0;
        while (done < n) {
          const auto a = sampling::random_cone(rng, -3, 2, 4);
          const auto b = geometry::DoubleCone{a.plus.shifted(rng.grid_rational(0, 1, 4)),
                                              a.minus.shifted(rng.grid_rational(0, 1, 4))};
          const geometry::ConeUnion u({a, b});
          geometry::DoubleCone dev = a;
          try {
            dev = geometry::cauchy_development(u);
          } catch (const DisconnectedProjection&) {
            continue;
          }
          ++done;
          const auto target = geometry::DoubleCone{sampling::random_target(rng), sampling::random_target(rng)};
          const auto global = skelcat::MtoM{sampling::random_embedding(rng, target.plus),
                                            sampling::random_embedding(rng, target.minus)};
          const localization::FragmentMorphism f{u, localization::Cone{target}, global};
          const auto df = localization::d_localize(f);
          for (int k = 0; k < 20; ++k) {
            const auto& c = u.cones()[static_cast<std::size_t>(k % 2)];
            const geometry::Point p{sampling::sorted_inside(rng, 1, c.plus.lo().value(), c.plus.hi().value())[0],
                                    sampling::sorted_inside(rng, 1, c.minus.lo().value(), c.minus.hi().value())[0]};
            if (!localization::naturality_holds_at(f, df, p)) {
              o.pass = false;
              o.details.push_back("naturality fails on " + u.str());
              break;
            }
          }
        }
        o.summary = "d_naturality: " + std::to_string(n) + " fragments";
        return o;
      };
    }
    fail_at(d["check"], "unknown check '" + check + "'");
  }

  const YAML::Node& root_;
  Parser& p_;
  std::uint64_t seed_;
  std::optional<double> tol_override_;
  double default_tol_ = 1e-9;
  std::map<std::string, ModelSpec> models_;
};

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("CHIRALKIT_SEED");
  if (!s || !*s) return std::nullopt;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ScenarioError(std::string("CHIRALKIT_SEED is not an integer: ") + s);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Definitions parse_definitions(const std::string& text) {
  const YAML::Node root = load_yaml(text);
  if (!root.IsMap()) throw ScenarioError("a scenario is a mapping at top level");
  Parser p;
  try {
    p.parse_all(root);
  } catch (const YAML::Exception& e) {
    throw ScenarioError(std::string("parse error: ") + e.what());
  }
  return std::move(p.defs);
}

Definitions load_definitions(const std::string& path) { return parse_definitions(read_file(path)); }

RunResult run_scenario_text(const std::string& text, const RunOptions& options) {
  RunResult result;
  std::vector<std::function<Outcome()>> steps;
  std::string header;
  Parser parser;
  YAML::Node root;
  std::uint64_t seed = 0;
  try {
    root = load_yaml(text);
    if (!root.IsMap()) throw ScenarioError("a scenario is a mapping at top level");
    if (options.seed) {
      seed = *options.seed;
    } else if (auto e = env_seed()) {
      seed = *e;
    } else if (root["seed"]) {
      seed = root["seed"].as<std::uint64_t>();
    }
    parser.parse_all(root);
    Runner runner(root, parser, seed, options.tolerance);
    steps = runner.prepare();
    header = "scenario: " + (root["name"] ? root["name"].as<std::string>() : std::string("unnamed")) +
             "\nseed: " + std::to_string(seed) + "\n";
  } catch (const ScenarioError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  } catch (const YAML::Exception& e) {
    return {2, std::string("error: parse error: ") + e.what() + "\n"};
  }

  std::ostringstream out;
  out << header;
  std::size_t failed = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    Outcome o;
    try {
      o = steps[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("error during check: ") + e.what(), {}};
    }
    out << "[" << i + 1 << "] " << o.summary << ": " << (o.pass ? "PASS" : "FAIL") << "\n";
    for (const auto& line : o.details) out << "    " << line << "\n";
    if (!o.pass) ++failed;
  }
  if (failed) {
    out << "result: FAIL (" << failed << " of " << steps.size() << " directives failed)\n";
    result.exit_code = 1;
  } else {
    out << "result: PASS (" << steps.size() << " directives)\n";
  }
  result.report = out.str();
  return result;
}

RunResult run_scenario_file(const std::string& path, const RunOptions& options) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const ScenarioError& e) {
    return {2, std::string("error: ") + e.what() + "\n"};
  }
  return run_scenario_text(text, options);
}

}  // namespace chiralkit::scenario
