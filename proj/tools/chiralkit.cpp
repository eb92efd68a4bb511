// Command-line front end: scenario runner plus a few small demonstrations.
#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "chiralkit/aqft.hpp"
#include "chiralkit/current/forms.hpp"
#include "chiralkit/current/models.hpp"
#include "chiralkit/current/propagator.hpp"
#include "chiralkit/current/weyl.hpp"
#include "chiralkit/errors.hpp"
#include "chiralkit/random.hpp"
#include "chiralkit/sampling.hpp"
#include "chiralkit/scenario.hpp"
#include "chiralkit/zigzag.hpp"

using namespace chiralkit;
using current::LineFn;
using current::Observable;
using skelcat::Obj2;
using skelcat::Sign;
using geometry::Interval;

namespace {

std::uint64_t seed_from(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* s = std::getenv("CHIRALKIT_SEED"); s && *s) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw scenario::ScenarioError(std::string("CHIRALKIT_SEED is not an integer: ") + s);
    }
  }
  return 0;
}

Interval interval_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw scenario::ScenarioError("an interval is written lo,hi: " + text);
  try {
    return Interval(parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1)));
  } catch (const std::exception& e) {
    throw scenario::ScenarioError("bad interval '" + text + "': " + e.what());
  }
}

// The three relation examples: two orthogonal pairs and a cylinder
// self-map against another morphism.
int builtin_orthogonality() {
  using maps1d::chart_onto;
  const auto q = [](long a, long b) { return ratio(a, b); };
  const skelcat::SkelMorphism2 a1 = skelcat::MtoM{chart_onto(Interval(q(0, 1), q(1, 1))), chart_onto(Interval(q(0, 1), q(1, 1)))};
  const skelcat::SkelMorphism2 b1 = skelcat::MtoM{chart_onto(Interval(q(2, 1), q(3, 1))), chart_onto(Interval(q(-3, 1), q(-2, 1)))};
  const skelcat::SkelMorphism2 a2 = skelcat::make_mto_cyl(chart_onto(Interval(q(0, 1), q(1, 4))), chart_onto(Interval(q(0, 1), q(1, 4))));
  const skelcat::SkelMorphism2 b2 = skelcat::make_mto_cyl(chart_onto(Interval(q(1, 2), q(3, 4))), chart_onto(Interval(q(-3, 4), q(-1, 2))));
  const skelcat::SkelMorphism2 c3 = skelcat::identity2(Obj2::Cylinder);
  const skelcat::SkelMorphism2 d3 = a2;
  const std::vector<std::tuple<std::string, skelcat::SkelMorphism2, skelcat::SkelMorphism2>> pairs{
      {"M->M   (0,1)x(0,1) vs (2,3)x(-3,-2)", a1, b1},
      {"M->M/Z (0,1/4)x(0,1/4) vs (1/2,3/4)x(-3/4,-1/2)", a2, b2},
      {"M/Z->M/Z identity vs M->M/Z (0,1/4)x(0,1/4)", c3, d3}};
  for (const auto& [label, f, g] : pairs) {
    std::cout << label << ": " << (skelcat::orthogonal2(f, g) ? "true" : "false") << "\n";
  }
  return 0;
}

int file_orthogonality(const std::string& path, const std::vector<std::string>& pairs) {
  const auto defs = scenario::load_definitions(path);
  if (pairs.empty()) throw scenario::ScenarioError("give at least one --pair a,b");
  for (const auto& p : pairs) {
    const auto comma = p.find(',');
    if (comma == std::string::npos) throw scenario::ScenarioError("a pair is written a,b: " + p);
    const std::string a = p.substr(0, comma), b = p.substr(comma + 1);
    bool v = false;
    if (defs.morphisms.count(a) && defs.morphisms.count(b)) {
      v = skelcat::orthogonal2(defs.morphisms.at(a), defs.morphisms.at(b));
    } else if (defs.morphisms1.count(a) && defs.morphisms1.count(b)) {
      v = skelcat::orthogonal1(defs.morphisms1.at(a), defs.morphisms1.at(b));
    } else {
      throw scenario::ScenarioError("unknown morphism pair " + p);
    }
    std::cout << a << " , " << b << ": " << (v ? "true" : "false") << "\n";
  }
  return 0;
}

std::string commutator_text(const Observable& a, const Observable& b) {
  const auto c = current::commutator(current::Elem2::generator(a), current::Elem2::generator(b), current::poisson_tau);
  if (c.is_zero()) return "0";
  if (c.terms().size() == 1 && c.terms().begin()->first.empty()) return c.terms().begin()->second.str();
  return c.str([](const Observable& x) { return "W[" + x.str() + "]"; });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chiralkit: chiral free boson and 2d AQFT toolkit"};
  app.require_subcommand(1);

  std::string run_file;
  std::optional<std::uint64_t> run_seed;
  std::optional<double> run_tol;
  auto* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("file", run_file, "scenario file")->required();
  run->add_option("--seed", run_seed, "random seed (overrides CHIRALKIT_SEED and the file)");
  run->add_option("--tolerance", run_tol, "numeric tolerance");

  std::string orth_file;
  std::vector<std::string> orth_pairs;
  auto* orth = app.add_subcommand("orthogonality", "decide orthogonality of morphism pairs");
  orth->add_option("file", orth_file, "definitions file (built-in examples when omitted)");
  orth->add_option("--pair", orth_pairs, "named pair a,b from the file");

  std::string chi_model = "current";
  std::string chi_sign = "+";
  std::size_t chi_witnesses = 20;
  std::optional<std::uint64_t> chi_seed;
  auto* chi = app.add_subcommand("chiralize", "counit test for chirality");
  chi->add_option("--model", chi_model, "current or pullback")->check(CLI::IsMember({"current", "pullback"}));
  chi->add_option("--sign", chi_sign, "+ or -")->check(CLI::IsMember({"+", "-"}));
  chi->add_option("--witnesses", chi_witnesses, "number of sampled witnesses");
  chi->add_option("--seed", chi_seed, "random seed");

  std::string com_file, com_a, com_b;
  bool com_numeric = false;
  auto* com = app.add_subcommand("commutator", "commutator of two Weyl generators");
  com->add_option("file", com_file, "definitions file");
  com->add_option("a", com_a, "first observable");
  com->add_option("b", com_b, "second observable");
  com->add_flag("--numeric", com_numeric, "also evaluate through the causal propagator");

  std::string zz_h = "0,1/4", zz_f = "0,1/2", zz_f2 = "1/4,3/4";
  auto* zz = app.add_subcommand("zigzag", "zig-zag between two cylinder embeddings");
  zz->add_option("--plus", zz_h, "image of the plus factor, lo,hi");
  zz->add_option("--fminus", zz_f, "image of the first minus factor");
  zz->add_option("--fminus2", zz_f2, "image of the second minus factor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      const auto r = scenario::run_scenario_file(run_file, {run_seed, run_tol});
      (r.exit_code == 2 ? std::cerr : std::cout) << r.report;
      return r.exit_code;
    }
    if (orth->parsed()) {
      return orth_file.empty() ? builtin_orthogonality() : file_orthogonality(orth_file, orth_pairs);
    }
    if (chi->parsed()) {
      const Sign sign = chi_sign == "+" ? Sign::Plus : Sign::Minus;
      Rng rng(seed_from(chi_seed));
      const auto ws = sampling::chirality_witnesses(rng, chi_witnesses);
      const auto v = chi_model == "current"
                         ? aqft::counit_and_chirality(current::current_model(), sign, ws)
                         : aqft::counit_and_chirality(
                               aqft::pullback_along_projection(current::chiral_component_model(sign), sign), sign, ws);
      std::cout << v.str() << "\n";
      return 0;
    }
    if (com->parsed()) {
      Observable a = Observable(Obj2::Minkowski, LineFn::triangle(0, 1, 2), LineFn());
      Observable b = Observable(Obj2::Minkowski, LineFn::triangle(1, 2, 3), LineFn());
      if (!com_file.empty()) {
        if (com_a.empty() || com_b.empty()) throw scenario::ScenarioError("name two observables from the file");
        const auto defs = scenario::load_definitions(com_file);
        if (!defs.observables.count(com_a)) throw scenario::ScenarioError("unknown observable " + com_a);
        if (!defs.observables.count(com_b)) throw scenario::ScenarioError("unknown observable " + com_b);
        a = defs.observables.at(com_a);
        b = defs.observables.at(com_b);
      }
      std::cout << commutator_text(a, b) << "\n";
      if (com_numeric) {
        const LineFn rho = LineFn::triangle(-1, 0, 1);
        const double t = current::tau_via_propagator(current::separable_presentation(a, rho),
                                                     current::separable_presentation(b, rho));
        std::ostringstream s;
        s << std::setprecision(12) << t;
        std::cout << "numeric: " << s.str() << " i\n";
      }
      return 0;
    }
    if (zz->parsed()) {
      const auto emb = [](const std::string& s) { return maps1d::BoundedLineEmbedding(maps1d::chart_onto(interval_arg(s))); };
      const auto z = zigzag::build_zigzag(emb(zz_h), emb(zz_f), emb(zz_f2));
      for (const auto& [name, m] : z.morphisms()) std::cout << name << ": " << skelcat::str(*m) << "\n";
      const auto cells = zigzag::check_zigzag(z);
      for (const auto& c : cells) {
        std::cout << "  " << c.cell << ": structural " << (c.structural ? "yes" : "no") << ", pointwise "
                  << (c.pointwise ? "yes" : "no") << "\n";
      }
      const bool ok = zigzag::commutes(cells);
      std::cout << "commutes: " << (ok ? "yes" : "no") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const scenario::ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
