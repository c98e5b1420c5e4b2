#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "attrition/game.hpp"

namespace attrition {

/// Gain threshold for accepting a mixed grid point as an approximate equilibrium.
inline constexpr double kGridGainTolerance = 1e-6;

struct GridPoint {
  double p = 0.0;  // probability the row player puts on its first action
  double q = 0.0;  // probability the column player puts on its first action
  double max_gain = 0.0;
  /// Sum over players of the payoff spread between their two pure actions
  /// against the opponent's mix; zero exactly at an interior equilibrium.
  double indifference_residual = 0.0;
};

struct BruteForceResult {
  /// Pure profiles whose largest unilateral gain is at most kPayoffTolerance.
  std::vector<PureProfile> pure;
  /// 2x2 only: grid points whose largest unilateral gain is below kGridGainTolerance.
  std::vector<GridPoint> grid;
  /// 2x2 only: the strictly interior grid point with the smallest
  /// indifference residual. Ranking by max_gain instead leaves long ties
  /// along one axis, so that point can sit several steps from the equilibrium.
  std::optional<GridPoint> best_interior;
};

/// Largest amount either player could gain by a unilateral pure deviation
/// from the profile (p, q) of a 2x2 game.
double max_unilateral_gain_2x2(const NormalFormGame& game, double p, double q);

/// Exhaustive equilibrium search used as a test oracle. Every pure profile is
/// checked directly; 2x2 games additionally get a (grid+1)^2 scan over mixes.
BruteForceResult brute_force_nash(const NormalFormGame& game, std::size_t grid);

}  // namespace attrition
