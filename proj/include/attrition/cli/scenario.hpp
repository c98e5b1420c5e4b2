#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "attrition/classic.hpp"
#include "attrition/dynamics.hpp"
#include "attrition/market.hpp"

namespace attrition::cli {

/// Malformed scenario document: bad JSON, wrong value types, unknown keys.
class ScenarioParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed document that does not describe a runnable model.
class ScenarioValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Model {
  Carcass,
  Deterrence,
  Entry,
  DynamicGame,
  Bioprospecting,
  Dynamics,
  ClassicAttrition,
  FreeEntry,
};

std::string_view to_string(Model m);
std::optional<Model> model_from_string(std::string_view name);

/// Every parameter name a scenario may carry, across all models.
const std::vector<std::string>& known_parameter_names();

struct ParamValue {
  double value = 0.0;
  std::optional<std::uint64_t> integer;  // set when the JSON number is a non-negative integer
};

/// A parsed but not yet validated scenario file.
///
///   { "model": "deterrence", "params": { "Q": 10, "d1": 6, "d2": 6 } }
///
/// `mode` ("literal" or "eq1") is accepted for the dynamics model only.
struct Scenario {
  std::string model_name;
  std::map<std::string, ParamValue> params;
  std::optional<std::string> mode;
};

/// Strict structural parse. Throws ScenarioParseError with a line:column or
/// field diagnostic.
Scenario parse_scenario(std::string_view text);

/// Reads and parses a file. Throws std::ios_base::failure if unreadable.
Scenario load_scenario(const std::string& path);

/// Model named by the scenario; throws ScenarioValidationError if unknown.
Model scenario_model(const Scenario& s);

/// Checks the parameter set against the model's required/optional keys and
/// the mode restriction. Throws ScenarioValidationError.
void validate_keys(const Scenario& s);

// Typed views of a validated scenario. Each throws ScenarioValidationError
// on range violations.

double carcass_prize(const Scenario& s);

struct DeterrenceInputs {
  double prize;
  double d1;
  double d2;
};
DeterrenceInputs deterrence_inputs(const Scenario& s);

MarketParams entry_market(const Scenario& s);

struct DynamicGameInputs {
  MarketParams market;
  std::size_t periods;  // T
  double discount;
  double pi_pirate;
  double pi_industry;
};
DynamicGameInputs dynamic_game_inputs(const Scenario& s);

struct BioprospectingInputs {
  double pi_healer;
  double pi_bioprospector;
  double entrance_cost;
  bool derived_from_market;  // computed from p, Q, c, n0, INV
};
BioprospectingInputs bioprospecting_inputs(const Scenario& s);

DynamicScenario dynamics_scenario(const Scenario& s);

struct ClassicInputs {
  AttritionContest contest;
  std::uint64_t seed;
};
ClassicInputs classic_inputs(const Scenario& s);

struct FreeEntryInputs {
  MarketParams market;
  double deterrence;
};
FreeEntryInputs free_entry_inputs(const Scenario& s);

/// Human-readable table of each model's parameters, for --help.
std::string model_parameter_help();

}  // namespace attrition::cli
