#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "attrition/cli/commands.hpp"

namespace {

constexpr const char* kDescription =
    "War-of-attrition models of intellectual-property disputes: equilibrium analysis of "
    "the carcass, pirate/industry and healer/bioprospector games, free entry, the classic "
    "continuous war of attrition, and the multi-period entry-deterrence simulation.";

constexpr const char* kExitCodes =
    "Exit codes: 0 success, 2 parse error, 3 validation error, 4 i/o error, "
    "5 self-check failure.\n";

}  // namespace

int main(int argc, char** argv) {
  using namespace attrition::cli;

  CLI::App app{kDescription, "attrition"};
  app.require_subcommand(1);
  app.footer(model_parameter_help() + kExitCodes);

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Equilibrium report for a scenario file");
  analyze->add_option("file", analyze_path, "Scenario JSON")->required();

  std::string simulate_path;
  std::string csv_path;
  std::optional<std::string> svg_path;
  auto* simulate =
      app.add_subcommand("simulate", "Run a dynamics scenario, write the trace CSV and chart");
  simulate->add_option("file", simulate_path, "Scenario JSON with model \"dynamics\"")->required();
  simulate->add_option("--out", csv_path, "Trace CSV output path")->required();
  simulate->add_option("--svg", svg_path, "Optional SVG profit chart output path");

  EssOptions ess;
  auto* attrition_ess = app.add_subcommand(
      "attrition-ess", "Verify the ESS indifference property of the continuous war of attrition");
  attrition_ess->add_option("--prize", ess.prize, "Prize V (> 0)")->required();
  attrition_ess->add_option("--cost", ess.cost_rate, "Cost rate k (> 0)")->required();
  attrition_ess->add_option("--grid", ess.grid, "Number of persistence levels over [0, 10V/k]")
      ->capture_default_str();
  attrition_ess->add_option("--rounds", ess.rounds, "Monte Carlo opponents per level")
      ->capture_default_str();
  attrition_ess->add_option("--seed", ess.seed, "Random seed")->capture_default_str();

  double p = 0.0;
  double q = 0.0;
  double c = 0.0;
  double d = 0.0;
  auto* free_entry =
      app.add_subcommand("free-entry", "Zero-profit producer count n* = pQ/(c + D)");
  free_entry->add_option("--p", p, "Price")->required();
  free_entry->add_option("--Q", q, "Total demand")->required();
  free_entry->add_option("--c", c, "Unit cost")->required();
  free_entry->add_option("--D", d, "Deterrence cost")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  }

  if (*analyze) return cmd_analyze(analyze_path, std::cout, std::cerr);
  if (*simulate) return cmd_simulate(simulate_path, csv_path, svg_path, std::cout, std::cerr);
  if (*attrition_ess) return cmd_attrition_ess(ess, std::cout, std::cerr);
  return cmd_free_entry(p, q, c, d, std::cout, std::cerr);
}
