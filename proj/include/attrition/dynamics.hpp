#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "attrition/market.hpp"

namespace attrition {

/// How per-period profits are computed while competition lasts.
enum class StreamMode {
  Literal,    // revenue per firm only, monopoly phase earns p Q
  NetProfit,  // p (Q / n) - c - D per firm, monopoly phase earns p Q - c
};

/// Exogenous time paths for the multi-period entry-deterrence simulation.
///
/// `market.producers` is the initial producer count, `market.deterrence_*`
/// the initial deterrence spending. The population falls by `n_decrement`
/// per period (floored at 1); deterrence grows linearly until competition
/// has left the market.
struct DynamicScenario {
  MarketParams market;
  double n_decrement = 0.0;
  double industry_deterrence_growth = 0.0;
  double pirate_deterrence_growth = 0.0;
  double discount = 0.95;
  std::size_t horizon = 1;
  StreamMode mode = StreamMode::NetProfit;

  void validate() const;
};

struct PeriodRecord {
  std::size_t t = 0;
  double producers = 0.0;
  double deterrence_pirate = 0.0;
  double deterrence_industry = 0.0;
  double pirate_profit = 0.0;
  double industry_profit = 0.0;
  double disc_cum_pirate = 0.0;
  double disc_cum_industry = 0.0;
};

struct SimulationTrace {
  std::vector<PeriodRecord> periods;
  /// First period with a single producer left, if reached within the horizon.
  std::optional<std::size_t> monopoly_onset;
};

/// Discounted pirate revenue over periods 0..periods-1 with n held fixed:
/// p (Q / n) (1 - d^T) / (1 - d). A discount of exactly 1 gives the plain sum.
double pirate_stream_literal(const MarketParams& params, std::size_t periods, double discount);

/// Competitive revenue over periods 0..periods-1 followed by the monopoly
/// revenue p Q forever after. Throws DivergentTail unless discount < 1.
double industry_stream_literal(const MarketParams& params, std::size_t periods, double discount);

SimulationTrace simulate_attrition(const DynamicScenario& scenario);

/// First period at which the discounted industry total is back at or above
/// zero after having been negative.
std::optional<std::size_t> breakeven_period(const SimulationTrace& trace);

enum class Decision { Fight, Accommodate };

/// Fight when the discounted industry total over the horizon is positive;
/// accommodating is worth 0.
Decision accommodation_decision(const SimulationTrace& trace);

enum class IncumbentBehavior { Blockaded, Deterred, Accommodated };

/// Three-way taxonomy of incumbent behaviour facing an entry threat.
IncumbentBehavior classify_incumbent_behavior(const SimulationTrace& trace,
                                              double entrant_profit_at_entry);

std::string_view to_string(StreamMode m);
std::string_view to_string(Decision d);
std::string_view to_string(IncumbentBehavior b);

}  // namespace attrition
