#include "attrition/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "attrition/error.hpp"

namespace attrition {

namespace {

void require_distinct(const std::vector<std::string>& labels, std::string_view who) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second)
      throw ContractViolation(std::string(who) + " action label repeated: " + l);
  }
}

void require_dimension(const NormalFormGame& game, Player who, const MixedStrategy& mix) {
  if (mix.size() != game.action_count(who)) {
    throw ContractViolation("mixed strategy has " + std::to_string(mix.size()) +
                            " entries, " + std::string(to_string(who)) + " player has " +
                            std::to_string(game.action_count(who)) + " actions");
  }
}

// Expected payoff to `who` of its pure action `own` against the opponent mix.
double pure_vs_mix(const NormalFormGame& game, Player who, std::size_t own,
                   const MixedStrategy& other) {
  double total = 0.0;
  for (std::size_t j = 0; j < other.size(); ++j) {
    if (other[j] != 0.0) total += other[j] * game.payoff_from(who, own, j);
  }
  return total;
}

}  // namespace

NormalFormGame::NormalFormGame(std::vector<std::string> row_actions,
                               std::vector<std::string> col_actions,
                               std::vector<std::vector<PayoffPair>> payoffs)
    : row_actions_(std::move(row_actions)), col_actions_(std::move(col_actions)) {
  if (row_actions_.empty() || col_actions_.empty())
    throw ContractViolation("each player needs at least one action");
  require_distinct(row_actions_, "row");
  require_distinct(col_actions_, "column");
  if (payoffs.size() != row_actions_.size())
    throw ContractViolation("payoff matrix has " + std::to_string(payoffs.size()) +
                            " rows, expected " + std::to_string(row_actions_.size()));
  cells_.reserve(row_actions_.size() * col_actions_.size());
  for (std::size_t r = 0; r < payoffs.size(); ++r) {
    if (payoffs[r].size() != col_actions_.size())
      throw ContractViolation("payoff row " + std::to_string(r) + " has " +
                              std::to_string(payoffs[r].size()) + " columns, expected " +
                              std::to_string(col_actions_.size()));
    for (const auto& cell : payoffs[r]) {
      if (!std::isfinite(cell.row) || !std::isfinite(cell.col))
        throw ContractViolation("payoff entries must be finite");
      cells_.push_back(cell);
    }
  }
}

const std::string& NormalFormGame::action_label(Player p, std::size_t i) const {
  return p == Player::Row ? row_actions_.at(i) : col_actions_.at(i);
}

MixedStrategy::MixedStrategy(std::vector<double> probabilities) : probs_(std::move(probabilities)) {
  if (probs_.empty()) throw ContractViolation("mixed strategy must be non-empty");
  double sum = 0.0;
  for (double x : probs_) {
    if (!std::isfinite(x) || x < 0.0)
      throw ContractViolation("mixed strategy probabilities must be finite and non-negative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw ContractViolation("mixed strategy probabilities must sum to 1");
}

MixedStrategy MixedStrategy::pure(std::size_t action_count, std::size_t action) {
  if (action >= action_count) throw ContractViolation("pure action index out of range");
  std::vector<double> p(action_count, 0.0);
  p[action] = 1.0;
  return MixedStrategy(std::move(p));
}

std::optional<std::size_t> MixedStrategy::pure_action() const {
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    if (probs_[i] == 1.0) return i;
  }
  return std::nullopt;
}

double expected_payoff(const NormalFormGame& game, Player who, const MixedStrategy& own,
                       const MixedStrategy& other) {
  require_dimension(game, who, own);
  require_dimension(game, opponent(who), other);
  double total = 0.0;
  for (std::size_t i = 0; i < own.size(); ++i) {
    if (own[i] != 0.0) total += own[i] * pure_vs_mix(game, who, i, other);
  }
  return total;
}

std::vector<std::size_t> best_response(const NormalFormGame& game, Player who,
                                       const MixedStrategy& opponent_mix) {
  require_dimension(game, opponent(who), opponent_mix);
  const std::size_t n = game.action_count(who);
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = pure_vs_mix(game, who, i, opponent_mix);
  const double best = *std::max_element(values.begin(), values.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] >= best - kPayoffTolerance) out.push_back(i);
  }
  return out;
}

std::optional<Dominance> dominant_action(const NormalFormGame& game, Player who) {
  const std::size_t own = game.action_count(who);
  const std::size_t other = game.action_count(opponent(who));
  for (std::size_t a = 0; a < own; ++a) {
    bool weak = true;
    bool strict = true;
    for (std::size_t b = 0; b < own && weak; ++b) {
      if (b == a) continue;
      for (std::size_t j = 0; j < other; ++j) {
        const double diff = game.payoff_from(who, a, j) - game.payoff_from(who, b, j);
        if (diff < -kPayoffTolerance) {
          weak = false;
          break;
        }
        if (diff <= kPayoffTolerance) strict = false;
      }
    }
    if (weak) return Dominance{a, strict ? DominanceKind::Strict : DominanceKind::Weak};
  }
  return std::nullopt;
}

std::vector<PureProfile> pure_nash(const NormalFormGame& game) {
  // Best-response sets against every pure opponent action, computed once.
  std::vector<std::vector<std::size_t>> row_br(game.cols());
  for (std::size_t c = 0; c < game.cols(); ++c)
    row_br[c] = best_response(game, Player::Row, MixedStrategy::pure(game.cols(), c));
  std::vector<std::vector<std::size_t>> col_br(game.rows());
  for (std::size_t r = 0; r < game.rows(); ++r)
    col_br[r] = best_response(game, Player::Col, MixedStrategy::pure(game.rows(), r));

  auto contains = [](const std::vector<std::size_t>& v, std::size_t x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  std::vector<PureProfile> out;
  for (std::size_t r = 0; r < game.rows(); ++r) {
    for (std::size_t c = 0; c < game.cols(); ++c) {
      if (contains(row_br[c], r) && contains(col_br[r], c)) out.push_back({r, c});
    }
  }
  return out;
}

namespace {

enum class Indifference { Solved, NoSolution, Degenerate };

// Solves slope * x = intercept for the mixing probability x of the first action.
Indifference solve_indifference(double slope, double intercept, double& x) {
  if (std::abs(slope) <= kPayoffTolerance) {
    return std::abs(intercept) <= kPayoffTolerance ? Indifference::Degenerate
                                                   : Indifference::NoSolution;
  }
  x = intercept / slope;
  return Indifference::Solved;
}

bool strictly_inside(double x) { return x > kPayoffTolerance && x < 1.0 - kPayoffTolerance; }

}  // namespace

Mixed2x2Result mixed_nash_2x2(const NormalFormGame& game) {
  if (!game.is_2x2()) throw ContractViolation("mixed_nash_2x2 requires a 2x2 game");
  const auto& g = game;
  // Row mixes with p on action 0 so that the column player is indifferent.
  const double p_slope = g.at(0, 0).col - g.at(1, 0).col - g.at(0, 1).col + g.at(1, 1).col;
  const double p_intercept = g.at(1, 1).col - g.at(1, 0).col;
  // Column mixes with q on action 0 so that the row player is indifferent.
  const double q_slope = g.at(0, 0).row - g.at(0, 1).row - g.at(1, 0).row + g.at(1, 1).row;
  const double q_intercept = g.at(1, 1).row - g.at(0, 1).row;

  double p = 0.0;
  double q = 0.0;
  const auto p_kind = solve_indifference(p_slope, p_intercept, p);
  const auto q_kind = solve_indifference(q_slope, q_intercept, q);

  const bool p_fails =
      p_kind == Indifference::NoSolution || (p_kind == Indifference::Solved && !strictly_inside(p));
  const bool q_fails =
      q_kind == Indifference::NoSolution || (q_kind == Indifference::Solved && !strictly_inside(q));
  if (p_fails || q_fails) return {Mixed2x2Status::None, std::nullopt};
  if (p_kind == Indifference::Degenerate || q_kind == Indifference::Degenerate)
    return {Mixed2x2Status::Continuum, std::nullopt};

  return {Mixed2x2Status::Interior,
          MixedProfile{MixedStrategy({p, 1.0 - p}), MixedStrategy({q, 1.0 - q})}};
}

bool is_symmetric(const NormalFormGame& game) {
  if (game.rows() != game.cols()) return false;
  for (std::size_t i = 0; i < game.rows(); ++i) {
    for (std::size_t j = 0; j < game.cols(); ++j) {
      if (std::abs(game.at(i, j).row - game.at(j, i).col) > kPayoffTolerance) return false;
    }
  }
  return true;
}

EssVerdict ess_check(const NormalFormGame& game, const MixedStrategy& candidate) {
  if (!is_symmetric(game)) throw ContractViolation("ESS check requires a symmetric game");
  if (candidate.size() != game.rows())
    throw ContractViolation("ESS candidate dimension does not match the game");

  const std::size_t n = game.rows();
  const double incumbent = expected_payoff(game, Player::Row, candidate, candidate);

  std::vector<double> mutant_vs_incumbent(n);
  for (std::size_t i = 0; i < n; ++i) {
    mutant_vs_incumbent[i] = pure_vs_mix(game, Player::Row, i, candidate);
    if (mutant_vs_incumbent[i] > incumbent + kPayoffTolerance) return EssVerdict::NotNash;
  }

  const auto own_pure = candidate.pure_action();
  for (std::size_t i = 0; i < n; ++i) {
    if (own_pure && *own_pure == i) continue;
    if (std::abs(mutant_vs_incumbent[i] - incumbent) > kPayoffTolerance) continue;
    // Tied against the incumbent: stability needs the incumbent to do strictly
    // better against the mutant than the mutant does against itself.
    const auto mutant = MixedStrategy::pure(n, i);
    const double incumbent_vs_mutant = expected_payoff(game, Player::Row, candidate, mutant);
    const double mutant_vs_mutant = game.payoff(Player::Row, i, i);
    if (!(incumbent_vs_mutant > mutant_vs_mutant + kPayoffTolerance)) return EssVerdict::NashNotEss;
  }
  return EssVerdict::Ess;
}

EquilibriumReport analyze(const NormalFormGame& game) {
  EquilibriumReport report;
  report.dominant_row = dominant_action(game, Player::Row);
  report.dominant_col = dominant_action(game, Player::Col);
  report.pure_nash = pure_nash(game);
  if (game.is_2x2()) report.mixed_2x2 = mixed_nash_2x2(game);
  report.symmetric = is_symmetric(game);
  if (report.symmetric) {
    for (std::size_t i = 0; i < game.rows(); ++i) {
      auto s = MixedStrategy::pure(game.rows(), i);
      const auto verdict = ess_check(game, s);
      report.ess.push_back({std::move(s), verdict});
    }
    if (report.mixed_2x2 && report.mixed_2x2->status == Mixed2x2Status::Interior) {
      const auto& row_mix = report.mixed_2x2->profile->row;
      report.ess.push_back({row_mix, ess_check(game, row_mix)});
    }
  }
  return report;
}

std::string_view to_string(Player p) { return p == Player::Row ? "row" : "column"; }

std::string_view to_string(DominanceKind k) { return k == DominanceKind::Strict ? "strict" : "weak"; }

std::string_view to_string(Mixed2x2Status s) {
  switch (s) {
    case Mixed2x2Status::Interior: return "interior";
    case Mixed2x2Status::None: return "none";
    case Mixed2x2Status::Continuum: return "continuum";
  }
  return "?";
}

std::string_view to_string(EssVerdict v) {
  switch (v) {
    case EssVerdict::Ess: return "ESS";
    case EssVerdict::NashNotEss: return "Nash, not ESS";
    case EssVerdict::NotNash: return "not Nash";
  }
  return "?";
}

}  // namespace attrition
