#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "chiralkit/current/observable.hpp"
#include "chiralkit/maps1d.hpp"
#include "chiralkit/skelcat.hpp"

// Declarative scenario files: named maps, morphisms, functions, observables
// and models, followed by a list of check directives.
namespace chiralkit::scenario {

/// Malformed file, unknown key or an unresolvable name. Maps to exit status 2.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Definitions {
  std::map<std::string, maps1d::PiecewiseMobius> maps;
  std::map<std::string, maps1d::CircleMapLift> lifts;
  std::map<std::string, skelcat::SkelMorphism2> morphisms;
  std::map<std::string, skelcat::SkelMorphism1> morphisms1;
  std::map<std::string, current::SlotFn> functions;
  std::map<std::string, current::Observable> observables;
};

/// Parses only the definition sections of a scenario document.
Definitions parse_definitions(const std::string& text);
Definitions load_definitions(const std::string& path);

struct RunOptions {
  std::optional<std::uint64_t> seed;  ///< overrides CHIRALKIT_SEED and the file
  std::optional<double> tolerance;    ///< overrides the file and directives
};

struct RunResult {
  int exit_code = 0;  ///< 0 all passed, 1 a check failed, 2 parse or resolution error
  std::string report;
};

/// Seed precedence: options, then CHIRALKIT_SEED, then the file's `seed`, then 0.
RunResult run_scenario_text(const std::string& text, const RunOptions& options);
RunResult run_scenario_file(const std::string& path, const RunOptions& options);

}  // namespace chiralkit::scenario
