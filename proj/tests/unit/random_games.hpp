#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "attrition/game.hpp"

namespace attrition::testing {

inline std::vector<std::string> action_names(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

/// Payoffs uniform in [lo, hi]; with `integer` they are rounded to whole
/// numbers so that ties are common.
inline NormalFormGame random_game(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                  double lo = -10.0, double hi = 10.0, bool integer = false) {
  std::uniform_real_distribution<double> u(lo, hi);
  auto draw = [&] {
    const double x = u(rng);
    return integer ? std::round(x) : x;
  };
  std::vector<std::vector<PayoffPair>> cells(rows, std::vector<PayoffPair>(cols));
  for (auto& row : cells)
    for (auto& cell : row) cell = {draw(), draw()};
  return NormalFormGame(action_names(rows, "r"), action_names(cols, "c"), std::move(cells));
}

/// Symmetric square game: column payoffs are the transpose of the row payoffs.
inline NormalFormGame random_symmetric_game(std::mt19937_64& rng, std::size_t n,
                                            bool integer = false) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (auto& row : a)
    for (auto& x : row) x = integer ? std::round(u(rng)) : u(rng);
  std::vector<std::vector<PayoffPair>> cells(n, std::vector<PayoffPair>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cells[i][j] = {a[i][j], a[j][i]};
  return NormalFormGame(action_names(n, "s"), action_names(n, "s"), std::move(cells));
}

inline NormalFormGame transform(const NormalFormGame& g, double row_scale, double row_shift,
                                double col_scale, double col_shift) {
  std::vector<std::vector<PayoffPair>> cells(g.rows(), std::vector<PayoffPair>(g.cols()));
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c)
      cells[r][c] = {row_scale * g.at(r, c).row + row_shift, col_scale * g.at(r, c).col + col_shift};
  return NormalFormGame(g.row_actions(), g.col_actions(), std::move(cells));
}

}  // namespace attrition::testing
