#include <cstdlib>

#include "chiralkit/scenario.hpp"
#include "common.hpp"

using namespace chiralkit;
using namespace chiralkit::scenario;

namespace {

const char* const kLaws = R"(
name: small
seed: 5
maps:
  unit_chart: {pl: {knots: ["-5", "5"], values: ["1/8", "7/8"], target: ["0", "1"]}}
  far_chart: {pl: {knots: ["-5", "5"], values: ["17/8", "23/8"], target: ["2", "3"]}}
  back_chart: {pl: {knots: ["-5", "5"], values: ["-23/8", "-17/8"], target: ["-3", "-2"]}}
morphisms:
  near: {kind: MtoM, plus: unit_chart, minus: unit_chart}
  far: {kind: MtoM, plus: far_chart, minus: back_chart}
functions:
  t1: {triangle: ["0", "1", "2"]}
  t2: {triangle: ["1", "2", "3"]}
observables:
  a: {ambient: M, plus: t1}
  b: {ambient: M, plus: t2}
directives:
  - check: einstein_causality
    model: current
    pairs: [[near, far]]
    random: 5
  - check: functoriality
    model: current
    random: 4
  - check: tau
    a: a
    b: b
    expect: "-1/4"
)";

}  // namespace

TEST_CASE("definitions") {
  const auto d = parse_definitions(kLaws);
  CHECK(d.maps.size() == 3);
  CHECK(d.morphisms.count("near") == 1);
  CHECK(d.functions.size() == 2);
  CHECK(d.observables.count("b") == 1);
}

TEST_CASE("passing scenario") {
  const auto r = run_scenario_text(kLaws, {});
  CHECK(r.exit_code == 0);
  CHECK_FALSE(r.report.empty());
}

TEST_CASE("same seed gives the same report") {
  RunOptions opts;
  opts.seed = 42;
  const auto a = run_scenario_text(kLaws, opts);
  const auto b = run_scenario_text(kLaws, opts);
  CHECK(a.report == b.report);
  opts.seed = 43;
  const auto c = run_scenario_text(kLaws, opts);
  CHECK(c.exit_code == 0);
}

TEST_CASE("failing checks exit 1") {
  const auto r = run_scenario_text(R"(
name: flipped
models:
  bad: {kind: current, corruption: sign_flip}
directives:
  - check: functoriality
    model: bad
    random: 4
)",
                                   {});
  CHECK(r.exit_code == 1);
  CHECK(r.report.find("witness") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  CHECK(run_scenario_text("directives: [", {}).exit_code == 2);
  CHECK(run_scenario_text("directives:\n  - check: no_such_check\n", {}).exit_code == 2);
  CHECK(run_scenario_text("directives:\n  - check: einstein_causality\n    pairs: [[x, y]]\n", {}).exit_code == 2);
  CHECK(run_scenario_file("/nonexistent/scenario.yaml", {}).exit_code == 2);
  CHECK_THROWS_AS(parse_definitions("maps: {m: {bogus: 1}}"), ScenarioError);
}
