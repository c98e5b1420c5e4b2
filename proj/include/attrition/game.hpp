#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace attrition {

/// Absolute tolerance for every payoff comparison in the analysis routines.
inline constexpr double kPayoffTolerance = 1e-9;

enum class Player { Row, Col };

constexpr Player opponent(Player p) { return p == Player::Row ? Player::Col : Player::Row; }

struct PayoffPair {
  double row = 0.0;
  double col = 0.0;

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

/// Two-player bimatrix game with labelled actions.
///
/// Construction validates the shape, finiteness of every payoff and
/// distinctness of labels per player; a constructed game is immutable.
class NormalFormGame {
 public:
  NormalFormGame(std::vector<std::string> row_actions, std::vector<std::string> col_actions,
                 std::vector<std::vector<PayoffPair>> payoffs);

  std::size_t rows() const { return row_actions_.size(); }
  std::size_t cols() const { return col_actions_.size(); }
  std::size_t action_count(Player p) const { return p == Player::Row ? rows() : cols(); }
  bool is_2x2() const { return rows() == 2 && cols() == 2; }

  const std::vector<std::string>& row_actions() const { return row_actions_; }
  const std::vector<std::string>& col_actions() const { return col_actions_; }
  const std::string& action_label(Player p, std::size_t i) const;

  const PayoffPair& at(std::size_t r, std::size_t c) const { return cells_[r * cols() + c]; }

  /// Payoff to `who` when the row player picks `r` and the column player `c`.
  double payoff(Player who, std::size_t r, std::size_t c) const {
    const auto& cell = at(r, c);
    return who == Player::Row ? cell.row : cell.col;
  }

  /// Payoff to `who` indexed from that player's point of view:
  /// `own` is who's action, `other` the opponent's.
  double payoff_from(Player who, std::size_t own, std::size_t other) const {
    return who == Player::Row ? at(own, other).row : at(other, own).col;
  }

  friend bool operator==(const NormalFormGame&, const NormalFormGame&) = default;

 private:
  std::vector<std::string> row_actions_;
  std::vector<std::string> col_actions_;
  std::vector<PayoffPair> cells_;  // row-major
};

/// Probability vector over one player's actions.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<double> probabilities);

  static MixedStrategy pure(std::size_t action_count, std::size_t action);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probabilities() const { return probs_; }

  /// Index of the single action played with probability 1, if any.
  std::optional<std::size_t> pure_action() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<double> probs_;
};

enum class DominanceKind { Strict, Weak };

struct Dominance {
  std::size_t action = 0;
  DominanceKind kind = DominanceKind::Weak;

  friend bool operator==(const Dominance&, const Dominance&) = default;
};

struct PureProfile {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const PureProfile&, const PureProfile&) = default;
  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;
};

struct MixedProfile {
  MixedStrategy row;
  MixedStrategy col;
};

enum class Mixed2x2Status {
  Interior,   // unique fully mixed equilibrium
  None,       // no interior equilibrium
  Continuum,  // at least one indifference equation reads 0 = 0
};

struct Mixed2x2Result {
  Mixed2x2Status status = Mixed2x2Status::None;
  std::optional<MixedProfile> profile;  // set only for Interior
};

enum class EssVerdict { Ess, NashNotEss, NotNash };

struct EssFinding {
  MixedStrategy candidate;
  EssVerdict verdict;
};

struct EquilibriumReport {
  std::optional<Dominance> dominant_row;
  std::optional<Dominance> dominant_col;
  std::vector<PureProfile> pure_nash;
  std::optional<Mixed2x2Result> mixed_2x2;  // only for 2x2 games
  bool symmetric = false;
  std::vector<EssFinding> ess;  // only for symmetric games
};

/// Expected payoff to `who` when it plays `own` and the opponent plays `other`.
double expected_payoff(const NormalFormGame& game, Player who, const MixedStrategy& own,
                       const MixedStrategy& other);

/// All actions of `who` whose expected payoff against `opponent_mix` is within
/// kPayoffTolerance of the best one. Never empty.
std::vector<std::size_t> best_response(const NormalFormGame& game, Player who,
                                       const MixedStrategy& opponent_mix);

/// The action that dominates every other action of `who`. Ties among weak
/// dominators resolve to the lowest index.
std::optional<Dominance> dominant_action(const NormalFormGame& game, Player who);

/// Pure profiles that are mutual best responses, row-major order. Weak
/// equilibria are included.
std::vector<PureProfile> pure_nash(const NormalFormGame& game);

/// Solves both indifference equations of a 2x2 game. Throws
/// ContractViolation for any other shape.
Mixed2x2Result mixed_nash_2x2(const NormalFormGame& game);

/// Square game whose column payoffs are the transpose of the row payoffs.
bool is_symmetric(const NormalFormGame& game);

/// Maynard Smith stability of `candidate` in a symmetric game, tested against
/// every pure mutant. For 2x2 games this coincides with testing all mutants.
EssVerdict ess_check(const NormalFormGame& game, const MixedStrategy& candidate);

/// Runs every analysis that applies to the game's shape.
EquilibriumReport analyze(const NormalFormGame& game);

std::string_view to_string(Player p);
std::string_view to_string(DominanceKind k);
std::string_view to_string(Mixed2x2Status s);
std::string_view to_string(EssVerdict v);

}  // namespace attrition
