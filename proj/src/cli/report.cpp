#include "attrition/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "attrition/cli/format.hpp"
#include "attrition/market.hpp"

namespace attrition::cli {

namespace {

std::string cell_text(const PayoffPair& p) {
  return "(" + format_number(p.row) + ", " + format_number(p.col) + ")";
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string dominance_text(const NormalFormGame& game, Player who,
                           const std::optional<Dominance>& d) {
  if (!d) return "none";
  return game.action_label(who, d->action) + " (" + std::string(to_string(d->kind)) + ")";
}

std::string mix_text(const NormalFormGame& game, Player who, const MixedStrategy& mix) {
  std::string out;
  for (std::size_t i = 0; i < mix.size(); ++i) {
    if (i) out += ", ";
    out += game.action_label(who, i) + " " + format_number(mix[i]);
  }
  return out;
}

}  // namespace

std::string render_game_report(const GameView& view) {
  const auto& g = view.game;
  const auto report = analyze(g);
  std::ostringstream out;
  out << "model: " << view.model << '\n'
      << "players: " << view.row_player << " (rows) vs " << view.col_player << " (columns)\n";
  for (const auto& line : view.inputs) out << "  " << line << '\n';

  std::size_t width = 14;
  for (const auto& l : g.row_actions()) width = std::max(width, l.size() + 2);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) width = std::max(width, cell_text(g.at(r, c)).size() + 2);

  out << "payoff matrix (" << view.row_player << ", " << view.col_player << "):\n  "
      << pad("", width);
  for (const auto& l : g.col_actions()) out << pad(l, width);
  out << '\n';
  for (std::size_t r = 0; r < g.rows(); ++r) {
    out << "  " << pad(g.row_actions()[r], width);
    for (std::size_t c = 0; c < g.cols(); ++c) out << pad(cell_text(g.at(r, c)), width);
    out << '\n';
  }

  out << "dominant strategy, " << view.row_player << ": "
      << dominance_text(g, Player::Row, report.dominant_row) << '\n'
      << "dominant strategy, " << view.col_player << ": "
      << dominance_text(g, Player::Col, report.dominant_col) << '\n';

  out << "pure Nash equilibria: " << report.pure_nash.size() << '\n';
  for (const auto& p : report.pure_nash) {
    out << "  (" << g.row_actions()[p.row] << ", " << g.col_actions()[p.col] << ") payoffs "
        << cell_text(g.at(p.row, p.col)) << '\n';
  }

  if (report.mixed_2x2) {
    out << "mixed equilibrium: " << to_string(report.mixed_2x2->status) << '\n';
    if (const auto& prof = report.mixed_2x2->profile) {
      out << "  " << view.row_player << ": " << mix_text(g, Player::Row, prof->row) << '\n'
          << "  " << view.col_player << ": " << mix_text(g, Player::Col, prof->col) << '\n';
    }
  }

  out << "symmetric: " << (report.symmetric ? "yes" : "no") << '\n';
  if (report.symmetric) {
    out << "ESS verdicts (pure mutants):\n";
    for (const auto& f : report.ess) {
      out << "  " << mix_text(g, Player::Row, f.candidate) << ": " << to_string(f.verdict)
          << '\n';
    }
  }

  out << "notes:\n"
      << "  payoff comparisons use absolute tolerance " << format_number(kPayoffTolerance)
      << "; weak equilibria and weak dominance are reported as such\n";
  for (const auto& n : view.notes) out << "  " << n << '\n';
  return out.str();
}

std::vector<double> indifference_grid(const AttritionContest& contest, std::size_t points) {
  std::vector<double> levels;
  if (points == 0) return levels;
  if (points == 1) return {0.0};
  const double upper = 10.0 * contest.scale();
  for (std::size_t i = 0; i < points; ++i)
    levels.push_back(upper * static_cast<double>(i) / static_cast<double>(points - 1));
  return levels;
}

IndifferenceCheck render_indifference_check(const AttritionContest& contest, std::size_t grid,
                                            std::size_t rounds, std::uint64_t seed) {
  const auto levels = indifference_grid(contest, grid);
  const auto outcomes = simulate_tournament(contest, levels, seed, rounds);

  IndifferenceCheck check;
  std::ostringstream out;
  out << "contest: V=" << format_number(contest.prize()) << " k=" << format_number(contest.cost_rate())
      << " (ESS persistence ~ exponential, mean V/k = " << format_number(contest.scale()) << ")\n"
      << "levels: " << levels.size() << " over [0, " << format_number(10.0 * contest.scale())
      << "], rounds " << rounds << ", seed " << seed << '\n'
      << pad("level", 16) << pad("payoff_vs_ess", 18) << pad("mc_mean", 18) << "mc_std_error\n";
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const double analytic = payoff_vs_ess(contest, levels[i]);
    check.max_abs_payoff = std::max(check.max_abs_payoff, std::abs(analytic));
    out << pad(format_number(levels[i]), 16) << pad(format_number(analytic), 18)
        << pad(format_number(outcomes[i].mean), 18) << format_number(outcomes[i].std_error)
        << '\n';
  }
  check.passed = check.max_abs_payoff <= kIndifferenceTolerance;
  out << "self-check: " << (check.passed ? "pass" : "FAIL") << " (max |payoff_vs_ess| = "
      << format_number(check.max_abs_payoff) << ", tolerance "
      << format_number(kIndifferenceTolerance) << ")\n";
  check.text = out.str();
  return check;
}

std::string render_free_entry(const MarketParams& market, double deterrence) {
  const double n_star = free_entry_n(market, deterrence);
  MarketParams at_entry = market;
  at_entry.producers = n_star;
  const double residual =
      n_star >= 1.0 ? competitive_profit(at_entry, deterrence)
                    : market.price * market.demand / n_star - market.unit_cost - deterrence;
  std::ostringstream out;
  out << "p=" << format_number(market.price) << " Q=" << format_number(market.demand)
      << " c=" << format_number(market.unit_cost) << " D=" << format_number(deterrence) << '\n'
      << "n* = " << format_number(n_star) << '\n'
      << "whole producers (floor): " << whole_producers(n_star) << '\n'
      << "residual profit at n*: " << format_number(residual) << '\n'
      << "interpretation: n* = p*Q/(c + D), the producer count at which p*(Q/n) - c - D = 0 "
         "(the form p*Q/D + c does not satisfy the zero-profit condition)\n";
  if (n_star < 1.0) out << "note: n* < 1, the market cannot cover even one producer's costs\n";
  return out.str();
}

std::string render_simulation_summary(const DynamicScenario& scenario,
                                      const SimulationTrace& trace) {
  std::ostringstream out;
  const auto onset = trace.monopoly_onset;
  const auto breakeven = breakeven_period(trace);
  const double entrant = trace.periods.front().pirate_profit;
  out << "model: dynamics (mode " << to_string(scenario.mode) << ")\n"
      << "periods simulated: " << trace.periods.size() << '\n'
      << "discount: " << format_number(scenario.discount) << '\n'
      << "monopoly onset: " << (onset ? std::to_string(*onset) : "none within horizon") << '\n'
      << "breakeven period: " << (breakeven ? std::to_string(*breakeven) : "none") << '\n'
      << "discounted industry total: " << format_number(trace.periods.back().disc_cum_industry)
      << '\n'
      << "discounted pirate total: " << format_number(trace.periods.back().disc_cum_pirate) << '\n'
      << "accommodation decision: " << to_string(accommodation_decision(trace)) << '\n'
      << "entrant profit at entry: " << format_number(entrant) << '\n'
      << "incumbent behavior: " << to_string(classify_incumbent_behavior(trace, entrant)) << '\n';
  return out.str();
}

}  // namespace attrition::cli
