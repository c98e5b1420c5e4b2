#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include "attrition/cli/report.hpp"
#include "attrition/cli/scenario.hpp"

namespace attrition::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitValidation = 3,
  kExitIo = 4,
  kExitSelfCheck = 5,
};

/// Game built from a scenario of one of the normal-form models.
GameView game_view_for(const Scenario& scenario);

// Each command writes its report to `out` only on success; diagnostics go to
// `err`. The return value is the process exit code.

int cmd_analyze(const std::string& path, std::ostream& out, std::ostream& err);

int cmd_simulate(const std::string& path, const std::string& csv_path,
                 const std::optional<std::string>& svg_path, std::ostream& out, std::ostream& err);

struct EssOptions {
  double prize = 0.0;
  double cost_rate = 0.0;
  std::size_t grid = 11;
  std::size_t rounds = 100000;
  std::uint64_t seed = 0;
};

int cmd_attrition_ess(const EssOptions& options, std::ostream& out, std::ostream& err);

int cmd_free_entry(double price, double demand, double unit_cost, double deterrence,
                   std::ostream& out, std::ostream& err);

}  // namespace attrition::cli
