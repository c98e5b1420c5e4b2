#include <string>

#include "attrition/cli/scenario.hpp"
#include "doctest.h"

using namespace attrition;
using namespace attrition::cli;

namespace {

Scenario validated(const std::string& text) {
  auto s = parse_scenario(text);
  validate_keys(s);
  return s;
}

}  // namespace

TEST_CASE("structural parse") {
  const auto s = parse_scenario(R"({"model": "deterrence", "params": {"Q": 10, "d1": 6, "d2": 6.5}})");
  CHECK(s.model_name == "deterrence");
  CHECK(s.params.size() == 3);
  CHECK(s.params.at("Q").value == 10.0);
  CHECK(s.params.at("Q").integer == 10u);
  CHECK_FALSE(s.params.at("d2").integer.has_value());
  CHECK_FALSE(s.mode.has_value());
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_scenario("{"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario("[]"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario(R"({"params": {}})"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": 3, "params": {}})"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "carcass"})"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "carcass", "params": []})"), ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "carcass", "params": {"Q": "10"}})"),
                  ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "carcass", "params": {"Qx": 10}})"),
                  ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "carcass", "params": {"Q": 1}, "extra": 1})"),
                  ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "carcass", "params": {"Q": 1, "Q": 2}})"),
                  ScenarioParseError);
  CHECK_THROWS_AS(parse_scenario(R"({"model": "dynamics", "mode": 1, "params": {}})"),
                  ScenarioParseError);

  SUBCASE("syntax errors carry a position") {
    try {
      parse_scenario("{\n  \"model\": \"carcass\",\n  \"params\": {\"Q\": }\n}");
      FAIL("expected a parse error");
    } catch (const ScenarioParseError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
}

TEST_CASE("model names") {
  CHECK(scenario_model(parse_scenario(R"({"model": "carcass", "params": {"Q": 1}})")) ==
        Model::Carcass);
  CHECK_THROWS_AS(scenario_model(parse_scenario(R"({"model": "poker", "params": {}})")),
                  ScenarioValidationError);
  for (auto m : {Model::Carcass, Model::Deterrence, Model::Entry, Model::DynamicGame,
                 Model::Bioprospecting, Model::Dynamics, Model::ClassicAttrition,
                 Model::FreeEntry})
    CHECK(model_from_string(to_string(m)) == m);
}

TEST_CASE("key validation") {
  CHECK_NOTHROW(validated(R"({"model": "carcass", "params": {"Q": 10}})"));
  CHECK_THROWS_AS(validated(R"({"model": "carcass", "params": {}})"), ScenarioValidationError);
  CHECK_THROWS_AS(validated(R"({"model": "carcass", "params": {"Q": 10, "p": 1}})"),
                  ScenarioValidationError);
  CHECK_THROWS_AS(validated(R"({"model": "carcass", "mode": "literal", "params": {"Q": 10}})"),
                  ScenarioValidationError);

  const std::string dyn =
      R"("params": {"p": 1, "Q": 100, "c": 1, "n0": 20, "r": 1, "g": 2, "horizon": 30})";
  CHECK_NOTHROW(validated(R"({"model": "dynamics", )" + dyn + "}"));
  CHECK_NOTHROW(validated(R"({"model": "dynamics", "mode": "literal", )" + dyn + "}"));
  CHECK_NOTHROW(validated(R"({"model": "dynamics", "mode": "eq1", )" + dyn + "}"));
  CHECK_THROWS_AS(validated(R"({"model": "dynamics", "mode": "exotic", )" + dyn + "}"),
                  ScenarioValidationError);

  CHECK_THROWS_AS(
      validated(R"({"model": "free_entry", "params": {"p": 1, "Q": 1, "c": 1, "D_P": 1, "D_I": 1}})"),
      ScenarioValidationError);

  SUBCASE("bioprospecting accepts exactly one input family") {
    CHECK_NOTHROW(validated(R"({"model": "bioprospecting", "params": {"f": 3, "pi_H": 5, "pi_M": 10}})"));
    CHECK_NOTHROW(validated(
        R"({"model": "bioprospecting", "params": {"f": 3, "p": 1, "Q": 100, "c": 1, "n0": 20, "INV": 5}})"));
    CHECK_THROWS_AS(validated(R"({"model": "bioprospecting", "params": {"f": 3, "pi_H": 5}})"),
                    ScenarioValidationError);
    CHECK_THROWS_AS(
        validated(R"({"model": "bioprospecting", "params": {"f": 3, "pi_H": 5, "pi_M": 1, "p": 1}})"),
        ScenarioValidationError);
    CHECK_THROWS_AS(validated(R"({"model": "bioprospecting", "params": {"pi_H": 5, "pi_M": 1}})"),
                    ScenarioValidationError);
  }
}

TEST_CASE("typed views") {
  CHECK(carcass_prize(validated(R"({"model": "carcass", "params": {"Q": 10}})")) == 10.0);
  CHECK_THROWS_AS(carcass_prize(validated(R"({"model": "carcass", "params": {"Q": -1}})")),
                  ScenarioValidationError);

  const auto d = deterrence_inputs(
      validated(R"({"model": "deterrence", "params": {"Q": 10, "d1": 6, "d2": 2}})"));
  CHECK(d.prize == 10.0);
  CHECK(d.d1 == 6.0);
  CHECK(d.d2 == 2.0);

  const auto dg = dynamic_game_inputs(validated(
      R"({"model": "dynamic_game", "params": {"p": 1, "Q": 100, "n0": 20, "T": 5, "delta": 0.9}})"));
  CHECK(dg.periods == 5u);
  CHECK(dg.pi_pirate == doctest::Approx(5 * (1 - std::pow(0.9, 5)) / 0.1));
  CHECK(dg.pi_industry > dg.pi_pirate);
  CHECK_THROWS_AS(dynamic_game_inputs(validated(
                      R"({"model": "dynamic_game", "params": {"p": 1, "Q": 100, "n0": 20, "T": 2.5, "delta": 0.9}})")),
                  ScenarioValidationError);
  CHECK_THROWS_AS(dynamic_game_inputs(validated(
                      R"({"model": "dynamic_game", "params": {"p": 1, "Q": 100, "n0": 20, "T": 5, "delta": 1}})")),
                  ScenarioValidationError);

  const auto bio = bioprospecting_inputs(validated(
      R"({"model": "bioprospecting", "params": {"f": 3, "p": 1, "Q": 100, "c": 1, "n0": 20, "INV": 5}})"));
  CHECK(bio.derived_from_market);
  CHECK(bio.pi_healer == doctest::Approx(4.0));
  CHECK(bio.pi_bioprospector == doctest::Approx(94.0));
  CHECK(bio.entrance_cost == 3.0);

  const auto dyn = dynamics_scenario(validated(
      R"({"model": "dynamics", "mode": "literal", "params": {"p": 1, "Q": 100, "c": 1, "n0": 20, "r": 1, "g": 2, "horizon": 30}})"));
  CHECK(dyn.discount == 0.95);
  CHECK(dyn.horizon == 30u);
  CHECK(dyn.mode == StreamMode::Literal);
  CHECK(dyn.industry_deterrence_growth == 2.0);
  CHECK_THROWS_AS(dynamics_scenario(validated(
                      R"({"model": "dynamics", "params": {"p": 1, "Q": 100, "c": 1, "n0": 20, "r": 1, "g": 2, "horizon": 0}})")),
                  ScenarioValidationError);

  const auto cl = classic_inputs(validated(R"({"model": "classic_attrition", "params": {"V": 2, "k": 4}})"));
  CHECK(cl.contest.scale() == 0.5);
  CHECK(cl.seed == 0u);
  CHECK_THROWS_AS(
      classic_inputs(validated(R"({"model": "classic_attrition", "params": {"V": 2, "k": 0}})")),
      ScenarioValidationError);

  const auto fe = free_entry_inputs(
      validated(R"({"model": "free_entry", "params": {"p": 1, "Q": 100, "c": 1, "D_I": 1}})"));
  CHECK(fe.deterrence == 1.0);
  try {
    free_entry_inputs(validated(R"({"model": "free_entry", "params": {"p": 1, "Q": 100, "c": 0}})"));
    FAIL("expected a validation error");
  } catch (const ScenarioValidationError& e) {
    CHECK(std::string(e.what()).find("unbounded entry") != std::string::npos);
  }
}

TEST_CASE("parameter help names every model") {
  const auto help = model_parameter_help();
  for (auto m : {"carcass", "deterrence", "entry", "dynamic_game", "bioprospecting", "dynamics",
                 "classic_attrition", "free_entry"})
    CHECK(help.find(m) != std::string::npos);
}
