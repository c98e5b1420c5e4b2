#pragma once

#include "attrition/game.hpp"

namespace attrition {

/// Economic parameters shared by the piracy and bioprospecting models.
struct MarketParams {
  double price = 1.0;                // p, currency per unit
  double demand = 1.0;               // Q, units per period
  double unit_cost = 0.0;            // c
  double deterrence_pirate = 0.0;    // D_P, per period
  double deterrence_industry = 0.0;  // D_I, per period
  double patent_investment = 0.0;    // INV, one-time
  double entrance_cost = 0.0;        // f, one-time
  double producers = 1.0;            // n, continuous

  /// Throws ContractViolation unless p > 0, Q > 0, n >= 1, all costs >= 0.
  void validate() const;
};

/// Per-firm profit in competitive equilibrium: p (Q / n) - c - D.
double competitive_profit(const MarketParams& params, double deterrence);

/// Profit of a single producer serving the whole demand: p Q - c.
double monopoly_profit(const MarketParams& params);

/// Producer count at which competitive profit is zero, n* = p Q / (c + D).
/// Throws UnboundedEntry when c + D = 0.
double free_entry_n(const MarketParams& params, double deterrence);

/// Whole producers that can enter profitably (floor of n*), for display.
long long whole_producers(double n);

/// Healers' benefit from public-domain knowledge: p (Q / n) - c.
double healer_profit(const MarketParams& params);

/// Bioprospector's patent monopoly benefit: p Q - c - INV.
double bioprospector_profit(const MarketParams& params);

namespace labels {
inline constexpr const char* kFight = "Fight";
inline constexpr const char* kLeave = "Leave";
inline constexpr const char* kBlockade = "Blockade";
inline constexpr const char* kAccommodate = "Accommodate";
inline constexpr const char* kPatent = "Patent";
inline constexpr const char* kNotPatent = "NotPatent";
}  // namespace labels

/// Two troops contesting a carcass of size Q; actions (Fight, Leave).
NormalFormGame build_carcass_game(double prize);

/// Pirate (rows) vs industry (columns) with blockade costs d1, d2;
/// actions (Blockade, Accommodate).
NormalFormGame build_deterrence_game(double prize, double d1, double d2);

/// Deterrence game with competitive profits at D_P, D_I and the monopoly
/// profit as the uncontested prize.
NormalFormGame build_entry_game(const MarketParams& params);

/// Deterrence game over discounted profit streams.
NormalFormGame build_dynamic_game(double pi_pirate, double pi_industry, double d_pirate,
                                  double d_industry);

/// Healers (Blockade, Accommodate) vs bioprospector (Patent, NotPatent),
/// with payoffs:
///
///                 Patent            NotPatent
///   Blockade      (pi_H, pi_M - f)  (pi_H, 0)
///   Accommodate   (0, pi_M)         (pi_H, 0)
NormalFormGame build_bioprospecting_game(double pi_healer, double pi_bioprospector,
                                         double entrance_cost);

}  // namespace attrition
