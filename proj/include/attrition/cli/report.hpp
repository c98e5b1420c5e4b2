#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "attrition/classic.hpp"
#include "attrition/dynamics.hpp"
#include "attrition/game.hpp"

namespace attrition::cli {

/// A game plus the context printed around its equilibrium analysis.
struct GameView {
  std::string model;
  std::string row_player;
  std::string col_player;
  NormalFormGame game;
  std::vector<std::string> inputs;  // derived quantities shown above the matrix
  std::vector<std::string> notes;   // interpretation and discrepancy notes
};

std::string render_game_report(const GameView& view);

struct IndifferenceCheck {
  std::string text;
  double max_abs_payoff = 0.0;
  bool passed = false;
};

/// Analytic payoff_vs_ess and Monte Carlo tournament mean per level on an
/// even grid over [0, 10 V/k]. Passes when every analytic value is within
/// kIndifferenceTolerance of zero.
inline constexpr double kIndifferenceTolerance = 1e-6;
IndifferenceCheck render_indifference_check(const AttritionContest& contest, std::size_t grid,
                                            std::size_t rounds, std::uint64_t seed);

/// Evenly spaced persistence levels over [0, 10 V/k]; a single level is 0.
std::vector<double> indifference_grid(const AttritionContest& contest, std::size_t points);

std::string render_free_entry(const MarketParams& market, double deterrence);

std::string render_simulation_summary(const DynamicScenario& scenario,
                                      const SimulationTrace& trace);

}  // namespace attrition::cli
