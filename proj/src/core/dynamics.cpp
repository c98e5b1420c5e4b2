#include "attrition/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "attrition/error.hpp"

namespace attrition {

namespace {

void require_periods(std::size_t periods) {
  if (periods < 1) throw ContractViolation("stream needs at least one competitive period");
}

// Sum of d^t for t = 0..periods-1.
double geometric_sum(double discount, std::size_t periods) {
  if (discount == 1.0) return static_cast<double>(periods);
  return (1.0 - std::pow(discount, static_cast<double>(periods))) / (1.0 - discount);
}

}  // namespace

void DynamicScenario::validate() const {
  market.validate();
  if (!std::isfinite(n_decrement) || n_decrement < 0.0)
    throw ContractViolation("n decrement r must be non-negative");
  if (!std::isfinite(industry_deterrence_growth) || industry_deterrence_growth < 0.0)
    throw ContractViolation("industry deterrence growth g must be non-negative");
  if (!std::isfinite(pirate_deterrence_growth) || pirate_deterrence_growth < 0.0)
    throw ContractViolation("pirate deterrence growth must be non-negative");
  if (!(discount > 0.0 && discount < 1.0)) throw ContractViolation("discount must lie in (0, 1)");
  if (horizon < 1) throw ContractViolation("horizon must be at least 1");
}

double pirate_stream_literal(const MarketParams& params, std::size_t periods, double discount) {
  params.validate();
  require_periods(periods);
  if (!(discount > 0.0 && discount <= 1.0)) throw ContractViolation("discount must lie in (0, 1]");
  return params.price * (params.demand / params.producers) * geometric_sum(discount, periods);
}

double industry_stream_literal(const MarketParams& params, std::size_t periods, double discount) {
  params.validate();
  require_periods(periods);
  if (discount >= 1.0)
    throw DivergentTail("divergent tail: the monopoly phase needs a discount below 1");
  if (!(discount > 0.0)) throw ContractViolation("discount must lie in (0, 1)");
  const double competitive =
      params.price * (params.demand / params.producers) * geometric_sum(discount, periods);
  const double monopoly = params.price * params.demand *
                          std::pow(discount, static_cast<double>(periods)) / (1.0 - discount);
  return competitive + monopoly;
}

SimulationTrace simulate_attrition(const DynamicScenario& scenario) {
  scenario.validate();
  const auto& m = scenario.market;
  const bool literal = scenario.mode == StreamMode::Literal;

  SimulationTrace trace;
  trace.periods.reserve(scenario.horizon);
  double cum_pirate = 0.0;
  double cum_industry = 0.0;
  for (std::size_t t = 0; t < scenario.horizon; ++t) {
    const double tt = static_cast<double>(t);
    PeriodRecord rec;
    rec.t = t;
    rec.producers = std::max(1.0, m.producers - scenario.n_decrement * tt);
    if (!trace.monopoly_onset && rec.producers <= 1.0) trace.monopoly_onset = t;

    if (trace.monopoly_onset) {
      rec.pirate_profit = 0.0;
      rec.industry_profit = literal ? m.price * m.demand : m.price * m.demand - m.unit_cost;
    } else {
      rec.deterrence_industry = m.deterrence_industry + scenario.industry_deterrence_growth * tt;
      rec.deterrence_pirate = m.deterrence_pirate + scenario.pirate_deterrence_growth * tt;
      const double revenue = m.price * (m.demand / rec.producers);
      rec.pirate_profit = literal ? revenue : revenue - m.unit_cost - rec.deterrence_pirate;
      rec.industry_profit = literal ? revenue : revenue - m.unit_cost - rec.deterrence_industry;
    }

    const double weight = std::pow(scenario.discount, tt);
    cum_pirate += weight * rec.pirate_profit;
    cum_industry += weight * rec.industry_profit;
    rec.disc_cum_pirate = cum_pirate;
    rec.disc_cum_industry = cum_industry;
    trace.periods.push_back(rec);
  }
  return trace;
}

std::optional<std::size_t> breakeven_period(const SimulationTrace& trace) {
  bool dipped = false;
  for (const auto& rec : trace.periods) {
    if (rec.disc_cum_industry < 0.0) {
      dipped = true;
    } else if (dipped) {
      return rec.t;
    }
  }
  return std::nullopt;
}

Decision accommodation_decision(const SimulationTrace& trace) {
  if (trace.periods.empty()) throw ContractViolation("decision needs a non-empty trace");
  return trace.periods.back().disc_cum_industry > 0.0 ? Decision::Fight : Decision::Accommodate;
}

IncumbentBehavior classify_incumbent_behavior(const SimulationTrace& trace,
                                              double entrant_profit_at_entry) {
  if (entrant_profit_at_entry > 0.0) return IncumbentBehavior::Accommodated;
  const bool spends = std::any_of(trace.periods.begin(), trace.periods.end(),
                                  [](const PeriodRecord& r) { return r.deterrence_industry > 0.0; });
  return spends ? IncumbentBehavior::Deterred : IncumbentBehavior::Blockaded;
}

std::string_view to_string(StreamMode m) { return m == StreamMode::Literal ? "literal" : "eq1"; }

std::string_view to_string(Decision d) { return d == Decision::Fight ? "Fight" : "Accommodate"; }

std::string_view to_string(IncumbentBehavior b) {
  switch (b) {
    case IncumbentBehavior::Blockaded: return "Blockaded";
    case IncumbentBehavior::Deterred: return "Deterred";
    case IncumbentBehavior::Accommodated: return "Accommodated";
  }
  return "?";
}

}  // namespace attrition
