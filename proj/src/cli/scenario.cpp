#include "attrition/cli/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "attrition/error.hpp"
#include "json.hpp"

namespace attrition::cli {

namespace {

using json = nlohmann::json;

struct ModelInfo {
  Model model;
  std::string_view name;
  std::vector<std::string> required;
  std::vector<std::string> optional;
  std::string_view summary;
};

const std::vector<ModelInfo>& model_table() {
  static const std::vector<ModelInfo> table = {
      {Model::Carcass, "carcass", {"Q"}, {},
       "two troops contest a carcass of size Q (Fight/Leave); fighting is strictly dominant"},
      {Model::Deterrence, "deterrence", {"Q", "d1", "d2"}, {},
       "pirate vs industry with blockade costs d1, d2 (Blockade/Accommodate); "
       "chicken structure once a cost exceeds Q/2"},
      {Model::Entry, "entry", {"p", "Q", "c", "n0"}, {"D_P", "D_I"},
       "deterrence game with competitive profits p(Q/n)-c-D and monopoly profit pQ-c"},
      {Model::DynamicGame, "dynamic_game", {"p", "Q", "n0", "T", "delta"}, {"D_P", "D_I"},
       "deterrence game over discounted streams: pirates earn p(Q/n) for T periods, "
       "the industry additionally earns pQ forever after"},
      {Model::Bioprospecting, "bioprospecting", {"f"}, {"pi_H", "pi_M", "p", "Q", "c", "n0", "INV"},
       "healers (Blockade/Accommodate) vs bioprospector (Patent/NotPatent); give pi_H and pi_M, "
       "or p, Q, c, n0, INV to derive pi_H = p(Q/n)-c and pi_M = pQ-c-INV"},
      {Model::Dynamics, "dynamics", {"p", "Q", "c", "n0", "r", "g", "horizon"},
       {"D_I", "D_P", "g_P", "delta"},
       "multi-period simulation: n falls by r per period, industry deterrence rises by g "
       "(pirate deterrence by g_P); discount delta defaults to 0.95; use the simulate command"},
      {Model::ClassicAttrition, "classic_attrition", {"V", "k"}, {"seed"},
       "continuous war of attrition with prize V and cost rate k; exponential ESS with mean V/k"},
      {Model::FreeEntry, "free_entry", {"p", "Q", "c"}, {"D_P", "D_I"},
       "zero-profit producer count n* = pQ/(c + D); give at most one of D_P, D_I"},
  };
  return table;
}

const ModelInfo& info_for(Model m) {
  const auto& t = model_table();
  return *std::find_if(t.begin(), t.end(), [m](const ModelInfo& i) { return i.model == m; });
}

bool has(const Scenario& s, const std::string& key) { return s.params.count(key) > 0; }

double get(const Scenario& s, const std::string& key) { return s.params.at(key).value; }

double get_or(const Scenario& s, const std::string& key, double fallback) {
  const auto it = s.params.find(key);
  return it == s.params.end() ? fallback : it->second.value;
}

std::uint64_t get_integer(const Scenario& s, const std::string& key) {
  const auto& v = s.params.at(key);
  if (!v.integer)
    throw ScenarioValidationError("params." + key + ": expected a non-negative integer");
  return *v.integer;
}

// Runs a library constructor/check, reporting contract failures as validation errors.
template <typename F>
auto validated(F&& f) {
  try {
    return f();
  } catch (const ContractViolation& e) {
    throw ScenarioValidationError(e.what());
  }
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

}  // namespace

std::string_view to_string(Model m) { return info_for(m).name; }

std::optional<Model> model_from_string(std::string_view name) {
  for (const auto& i : model_table()) {
    if (i.name == name) return i.model;
  }
  return std::nullopt;
}

const std::vector<std::string>& known_parameter_names() {
  static const std::vector<std::string> names = {
      "p", "Q", "c", "n0", "D_P", "D_I", "d1", "d2", "INV", "f", "pi_H",
      "pi_M", "V", "k", "r", "g", "g_P", "delta", "horizon", "T", "seed"};
  return names;
}

Scenario parse_scenario(std::string_view text) {
  // Duplicate keys would otherwise be resolved silently by the JSON library.
  std::vector<std::set<std::string>> open_objects;
  json::parser_callback_t reject_duplicates = [&](int, json::parse_event_t event, json& parsed) {
    if (event == json::parse_event_t::object_start) {
      open_objects.emplace_back();
    } else if (event == json::parse_event_t::object_end) {
      open_objects.pop_back();
    } else if (event == json::parse_event_t::key) {
      const auto key = parsed.get<std::string>();
      if (!open_objects.back().insert(key).second)
        throw ScenarioParseError("duplicate key \"" + key + "\"");
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), reject_duplicates);
  } catch (const json::parse_error& e) {
    throw ScenarioParseError("invalid JSON at " + line_column(text, e.byte) + ": " + e.what());
  }

  if (!doc.is_object()) throw ScenarioParseError("top level must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "model" && key != "params" && key != "mode")
      throw ScenarioParseError("unknown top-level field \"" + key + "\"");
  }

  Scenario s;
  if (!doc.contains("model")) throw ScenarioParseError("missing field \"model\"");
  if (!doc["model"].is_string()) throw ScenarioParseError("field \"model\" must be a string");
  s.model_name = doc["model"].get<std::string>();

  if (doc.contains("mode")) {
    if (!doc["mode"].is_string()) throw ScenarioParseError("field \"mode\" must be a string");
    s.mode = doc["mode"].get<std::string>();
  }

  if (!doc.contains("params")) throw ScenarioParseError("missing field \"params\"");
  const auto& params = doc["params"];
  if (!params.is_object()) throw ScenarioParseError("field \"params\" must be an object");
  const auto& names = known_parameter_names();
  for (const auto& [key, value] : params.items()) {
    if (std::find(names.begin(), names.end(), key) == names.end())
      throw ScenarioParseError("unknown parameter \"params." + key + "\"");
    if (!value.is_number())
      throw ScenarioParseError("parameter \"params." + key + "\" must be a number");
    ParamValue pv;
    pv.value = value.get<double>();
    if (value.is_number_unsigned()) {
      pv.integer = value.get<std::uint64_t>();
    } else if (value.is_number_float() && pv.value >= 0.0 && pv.value == std::floor(pv.value) &&
               pv.value < 9007199254740992.0) {
      pv.integer = static_cast<std::uint64_t>(pv.value);
    }
    s.params.emplace(key, pv);
  }
  return s;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read scenario file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

Model scenario_model(const Scenario& s) {
  const auto m = model_from_string(s.model_name);
  if (!m) throw ScenarioValidationError("unknown model \"" + s.model_name + "\"");
  return *m;
}

void validate_keys(const Scenario& s) {
  const auto& info = info_for(scenario_model(s));
  for (const auto& key : info.required) {
    if (!has(s, key))
      throw ScenarioValidationError("model " + std::string(info.name) +
                                    " requires parameter params." + key);
  }
  for (const auto& [key, _] : s.params) {
    const bool listed =
        std::find(info.required.begin(), info.required.end(), key) != info.required.end() ||
        std::find(info.optional.begin(), info.optional.end(), key) != info.optional.end();
    if (!listed)
      throw ScenarioValidationError("parameter params." + key + " does not apply to model " +
                                    std::string(info.name));
  }
  for (const auto& [key, value] : s.params) {
    if (!std::isfinite(value.value))
      throw ScenarioValidationError("parameter params." + key + " must be finite");
  }
  if (s.mode) {
    if (info.model != Model::Dynamics)
      throw ScenarioValidationError("field \"mode\" applies to the dynamics model only");
    if (*s.mode != "literal" && *s.mode != "eq1")
      throw ScenarioValidationError("field \"mode\" must be \"literal\" or \"eq1\"");
  }
  if (info.model == Model::FreeEntry && has(s, "D_P") && has(s, "D_I"))
    throw ScenarioValidationError("free_entry takes at most one of params.D_P, params.D_I");
  if (info.model == Model::Bioprospecting) {
    const bool direct = has(s, "pi_H") || has(s, "pi_M");
    const bool market = has(s, "p") || has(s, "Q") || has(s, "c") || has(s, "n0") || has(s, "INV");
    if (direct == market)
      throw ScenarioValidationError(
          "bioprospecting takes either pi_H and pi_M, or p, Q, c, n0 and INV");
    const std::vector<std::string> need =
        direct ? std::vector<std::string>{"pi_H", "pi_M"}
               : std::vector<std::string>{"p", "Q", "c", "n0", "INV"};
    for (const auto& key : need) {
      if (!has(s, key))
        throw ScenarioValidationError("model bioprospecting requires parameter params." + key);
    }
  }
}

double carcass_prize(const Scenario& s) {
  const double q = get(s, "Q");
  if (!(q > 0.0)) throw ScenarioValidationError("params.Q must be positive");
  return q;
}

DeterrenceInputs deterrence_inputs(const Scenario& s) {
  DeterrenceInputs in{get(s, "Q"), get(s, "d1"), get(s, "d2")};
  if (!(in.prize > 0.0)) throw ScenarioValidationError("params.Q must be positive");
  if (in.d1 < 0.0 || in.d2 < 0.0)
    throw ScenarioValidationError("params.d1 and params.d2 must be non-negative");
  return in;
}

MarketParams entry_market(const Scenario& s) {
  MarketParams m;
  m.price = get_or(s, "p", 1.0);
  m.demand = get_or(s, "Q", 1.0);
  m.unit_cost = get_or(s, "c", 0.0);
  m.producers = get_or(s, "n0", 1.0);
  m.deterrence_pirate = get_or(s, "D_P", 0.0);
  m.deterrence_industry = get_or(s, "D_I", 0.0);
  m.patent_investment = get_or(s, "INV", 0.0);
  m.entrance_cost = get_or(s, "f", 0.0);
  validated([&] {
    m.validate();
    return 0;
  });
  return m;
}

DynamicGameInputs dynamic_game_inputs(const Scenario& s) {
  const auto market = entry_market(s);
  const auto periods = get_integer(s, "T");
  if (periods < 1) throw ScenarioValidationError("params.T must be at least 1");
  const double discount = get(s, "delta");
  if (!(discount > 0.0 && discount < 1.0))
    throw ScenarioValidationError("params.delta must lie in (0, 1)");
  return validated([&] {
    return DynamicGameInputs{market, periods, discount,
                             pirate_stream_literal(market, periods, discount),
                             industry_stream_literal(market, periods, discount)};
  });
}

BioprospectingInputs bioprospecting_inputs(const Scenario& s) {
  const double f = get(s, "f");
  if (f < 0.0) throw ScenarioValidationError("params.f must be non-negative");
  if (has(s, "pi_H")) return {get(s, "pi_H"), get(s, "pi_M"), f, false};
  const auto market = entry_market(s);
  return validated([&] {
    return BioprospectingInputs{healer_profit(market), bioprospector_profit(market), f, true};
  });
}

DynamicScenario dynamics_scenario(const Scenario& s) {
  DynamicScenario d;
  d.market = entry_market(s);
  d.n_decrement = get(s, "r");
  d.industry_deterrence_growth = get(s, "g");
  d.pirate_deterrence_growth = get_or(s, "g_P", 0.0);
  d.discount = get_or(s, "delta", 0.95);
  d.horizon = get_integer(s, "horizon");
  d.mode = s.mode && *s.mode == "literal" ? StreamMode::Literal : StreamMode::NetProfit;
  validated([&] {
    d.validate();
    return 0;
  });
  return d;
}

ClassicInputs classic_inputs(const Scenario& s) {
  const std::uint64_t seed = has(s, "seed") ? get_integer(s, "seed") : 0;
  return validated([&] { return ClassicInputs{AttritionContest(get(s, "V"), get(s, "k")), seed}; });
}

FreeEntryInputs free_entry_inputs(const Scenario& s) {
  const auto market = entry_market(s);
  const double deterrence = get_or(s, "D_P", get_or(s, "D_I", 0.0));
  if (deterrence < 0.0) throw ScenarioValidationError("deterrence must be non-negative");
  if (!(market.unit_cost + deterrence > 0.0))
    throw ScenarioValidationError("unbounded entry: c + D = 0, profit never reaches zero");
  return {market, deterrence};
}

std::string model_parameter_help() {
  std::ostringstream out;
  out << "Scenario models (JSON: {\"model\": ..., \"params\": {...}, \"mode\": ...}):\n";
  for (const auto& i : model_table()) {
    out << "  " << i.name << "\n      " << i.summary << "\n      required:";
    for (const auto& k : i.required) out << ' ' << k;
    if (!i.optional.empty()) {
      out << "\n      optional:";
      for (const auto& k : i.optional) out << ' ' << k;
    }
    out << '\n';
  }
  out << "  mode (dynamics only): eq1 (default, net of c and D) or literal (revenue only)\n";
  return out.str();
}

}  // namespace attrition::cli
