#include "attrition/cli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <vector>

#include "attrition/cli/format.hpp"
#include "attrition/cli/svg_chart.hpp"
#include "attrition/cli/trace_csv.hpp"
#include "attrition/error.hpp"
#include "attrition/market.hpp"

namespace attrition::cli {

namespace {

GameView carcass_view(const Scenario& s) {
  const double q = carcass_prize(s);
  return {"carcass", "troop 1", "troop 2", build_carcass_game(q),
          {"Q = " + format_number(q)},
          {"fighting is strictly dominant for any Q > 0; both troops share Q/2"}};
}

GameView deterrence_view(const Scenario& s) {
  const auto in = deterrence_inputs(s);
  GameView v{"deterrence", "pirate", "industry", build_deterrence_game(in.prize, in.d1, in.d2),
             {"Q = " + format_number(in.prize), "d1 = " + format_number(in.d1) +
                                                    " (pirate), d2 = " + format_number(in.d2) +
                                                    " (industry)"},
             {}};
  const bool both_fight = in.d1 <= in.prize / 2 + kPayoffTolerance &&
                          in.d2 <= in.prize / 2 + kPayoffTolerance;
  v.notes.push_back(std::string("regime: (Blockade, Blockade) is an equilibrium iff d1 <= Q/2 and "
                                "d2 <= Q/2; here ") +
                    (both_fight ? "both costs are within Q/2" : "a cost exceeds Q/2 (chicken)"));
  return v;
}

GameView entry_view(const Scenario& s) {
  const auto m = entry_market(s);
  const double pi1 = competitive_profit(m, m.deterrence_pirate);
  const double pi2 = competitive_profit(m, m.deterrence_industry);
  const double pim = monopoly_profit(m);
  return {"entry",
          "pirate",
          "industry",
          build_entry_game(m),
          {"pi_1 = p(Q/n) - c - D_P = " + format_number(pi1),
           "pi_2 = p(Q/n) - c - D_I = " + format_number(pi2),
           "pi_m = pQ - c = " + format_number(pim)},
          {"n is the continuous producer count n0 = " + format_number(m.producers)}};
}

GameView dynamic_game_view(const Scenario& s) {
  const auto in = dynamic_game_inputs(s);
  return {"dynamic_game",
          "pirate",
          "industry",
          build_dynamic_game(in.pi_pirate, in.pi_industry, in.market.deterrence_pirate,
                             in.market.deterrence_industry),
          {"T = " + std::to_string(in.periods) + ", delta = " + format_number(in.discount),
           "pi_P = sum_{t<T} delta^t p(Q/n) = " + format_number(in.pi_pirate),
           "pi_I = pi_P + sum_{t>=T} delta^t pQ = " + format_number(in.pi_industry)},
          {"streams are discounted by delta; without discounting the monopoly tail diverges",
           "competition runs over periods 0..T-1, monopoly from period T"}};
}

GameView bioprospecting_view(const Scenario& s) {
  const auto in = bioprospecting_inputs(s);
  GameView v{"bioprospecting",
             "healers",
             "bioprospector",
             build_bioprospecting_game(in.pi_healer, in.pi_bioprospector, in.entrance_cost),
             {"pi_H = " + format_number(in.pi_healer) +
                  (in.derived_from_market ? " (p(Q/n) - c)" : ""),
              "pi_M = " + format_number(in.pi_bioprospector) +
                  (in.derived_from_market ? " (pQ - c - INV)" : ""),
              "f = " + format_number(in.entrance_cost)},
             {}};
  v.notes.push_back(
      "caption discrepancy: the reading that the bioprospector patents while healers "
      "accommodate is not supported by this matrix; Accommodate is never a healer best response "
      "against Patent while pi_H > 0, so the equilibria above come from the cells as given");
  v.notes.push_back(
      "patenting pays iff pi_M >= f (the bioprospector's payoff against Blockade), not pi_H - f > 0");
  if (in.pi_bioprospector < in.entrance_cost)
    v.notes.push_back("pi_M < f: the outcome is blockade and no patent (a weak equilibrium)");
  return v;
}

// Translates every failure class into the documented exit code.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ScenarioParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ScenarioValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ContractViolation& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const UnboundedEntry& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DivergentTail& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::ios_base::failure& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
  f << contents;
  f.flush();
  if (!f) throw std::ios_base::failure("failed writing " + path.string());
}

}  // namespace

GameView game_view_for(const Scenario& scenario) {
  switch (scenario_model(scenario)) {
    case Model::Carcass: return carcass_view(scenario);
    case Model::Deterrence: return deterrence_view(scenario);
    case Model::Entry: return entry_view(scenario);
    case Model::DynamicGame: return dynamic_game_view(scenario);
    case Model::Bioprospecting: return bioprospecting_view(scenario);
    default: break;
  }
  throw ScenarioValidationError("model " + scenario.model_name + " is not a normal-form game");
}

int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto scenario = load_scenario(path);
    validate_keys(scenario);
    switch (scenario_model(scenario)) {
      case Model::Dynamics:
        throw ScenarioValidationError("model dynamics is run with the simulate command");
      case Model::FreeEntry: {
        const auto in = free_entry_inputs(scenario);
        out << "model: free_entry\n" << render_free_entry(in.market, in.deterrence);
        return static_cast<int>(kExitOk);
      }
      case Model::ClassicAttrition: {
        const auto in = classic_inputs(scenario);
        const auto check = render_indifference_check(in.contest, 11, 100000, in.seed);
        out << "model: classic_attrition\n" << check.text;
        return static_cast<int>(check.passed ? kExitOk : kExitSelfCheck);
      }
      default:
        out << render_game_report(game_view_for(scenario));
        return static_cast<int>(kExitOk);
    }
  });
}

int cmd_simulate(const std::string& path, const std::string& csv_path,
                 const std::optional<std::string>& svg_path, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const auto scenario = load_scenario(path);
    validate_keys(scenario);
    if (scenario_model(scenario) != Model::Dynamics)
      throw ScenarioValidationError("simulate needs a scenario with model \"dynamics\"");
    const auto dyn = dynamics_scenario(scenario);
    const auto trace = simulate_attrition(dyn);

    std::vector<std::pair<std::filesystem::path, std::string>> outputs;
    outputs.emplace_back(csv_path, trace_to_csv(trace));
    if (svg_path) outputs.emplace_back(*svg_path, render_profit_chart(trace));

    std::vector<std::filesystem::path> written;
    try {
      for (const auto& [p, contents] : outputs) {
        write_file(p, contents);
        written.push_back(p);
      }
    } catch (const std::ios_base::failure&) {
      std::error_code ignored;
      for (const auto& p : written) std::filesystem::remove(p, ignored);
      throw;
    }

    out << render_simulation_summary(dyn, trace) << "wrote: " << csv_path << '\n';
    if (svg_path) out << "wrote: " << *svg_path << '\n';
    return static_cast<int>(kExitOk);
  });
}

int cmd_attrition_ess(const EssOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AttritionContest contest(options.prize, options.cost_rate);
    if (options.grid < 1) throw ContractViolation("--grid must be at least 1");
    if (options.rounds < 1) throw ContractViolation("--rounds must be at least 1");
    const auto check = render_indifference_check(contest, options.grid, options.rounds, options.seed);
    out << check.text;
    return static_cast<int>(check.passed ? kExitOk : kExitSelfCheck);
  });
}

int cmd_free_entry(double price, double demand, double unit_cost, double deterrence,
                   std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    MarketParams m;
    m.price = price;
    m.demand = demand;
    m.unit_cost = unit_cost;
    out << render_free_entry(m, deterrence);
    return static_cast<int>(kExitOk);
  });
}

}  // namespace attrition::cli
