#include "attrition/brute_force.hpp"

#include <algorithm>
#include <cmath>

#include "attrition/error.hpp"

namespace attrition {

namespace {

double pure_profile_gain(const NormalFormGame& game, std::size_t r, std::size_t c) {
  double gain = 0.0;
  for (std::size_t alt = 0; alt < game.rows(); ++alt)
    gain = std::max(gain, game.at(alt, c).row - game.at(r, c).row);
  for (std::size_t alt = 0; alt < game.cols(); ++alt)
    gain = std::max(gain, game.at(r, alt).col - game.at(r, c).col);
  return gain;
}

double indifference_residual_2x2(const NormalFormGame& g, double p, double q) {
  const double row_first = q * g.at(0, 0).row + (1 - q) * g.at(0, 1).row;
  const double row_second = q * g.at(1, 0).row + (1 - q) * g.at(1, 1).row;
  const double col_first = p * g.at(0, 0).col + (1 - p) * g.at(1, 0).col;
  const double col_second = p * g.at(0, 1).col + (1 - p) * g.at(1, 1).col;
  return std::abs(row_first - row_second) + std::abs(col_first - col_second);
}

}  // namespace

double max_unilateral_gain_2x2(const NormalFormGame& game, double p, double q) {
  const auto& g = game;
  const double row_first = q * g.at(0, 0).row + (1 - q) * g.at(0, 1).row;
  const double row_second = q * g.at(1, 0).row + (1 - q) * g.at(1, 1).row;
  const double row_now = p * row_first + (1 - p) * row_second;
  const double col_first = p * g.at(0, 0).col + (1 - p) * g.at(1, 0).col;
  const double col_second = p * g.at(0, 1).col + (1 - p) * g.at(1, 1).col;
  const double col_now = q * col_first + (1 - q) * col_second;
  return std::max({0.0, row_first - row_now, row_second - row_now, col_first - col_now,
                   col_second - col_now});
}

BruteForceResult brute_force_nash(const NormalFormGame& game, std::size_t grid) {
  if (grid < 1) throw ContractViolation("brute force grid must be at least 1");
  BruteForceResult result;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      if (pure_profile_gain(game, r, c) <= kPayoffTolerance) result.pure.push_back({r, c});
    }
  }
  if (!game.is_2x2()) return result;

  const double step = 1.0 / static_cast<double>(grid);
  for (std::size_t i = 0; i <= grid; ++i) {
    const double p = static_cast<double>(i) * step;
    for (std::size_t j = 0; j <= grid; ++j) {
      const double q = static_cast<double>(j) * step;
      const GridPoint point{p, q, max_unilateral_gain_2x2(game, p, q),
                            indifference_residual_2x2(game, p, q)};
      if (point.max_gain < kGridGainTolerance) result.grid.push_back(point);
      const bool interior = i > 0 && i < grid && j > 0 && j < grid;
      if (interior && (!result.best_interior || point.indifference_residual <
                                                result.best_interior->indifference_residual))
        result.best_interior = point;
    }
  }
  return result;
}

}  // namespace attrition
