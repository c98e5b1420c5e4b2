#include "attrition/market.hpp"

#include <cmath>
#include <string>

#include "attrition/error.hpp"

namespace attrition {

namespace {

void require_finite(double x, const char* name) {
  if (!std::isfinite(x)) throw ContractViolation(std::string(name) + " must be finite");
}

void require_nonnegative(double x, const char* name) {
  require_finite(x, name);
  if (x < 0.0) throw ContractViolation(std::string(name) + " must be non-negative");
}

}  // namespace

void MarketParams::validate() const {
  require_finite(price, "p");
  require_finite(demand, "Q");
  require_finite(producers, "n");
  if (!(price > 0.0)) throw ContractViolation("p must be positive");
  if (!(demand > 0.0)) throw ContractViolation("Q must be positive");
  if (!(producers >= 1.0)) throw ContractViolation("n must be at least 1");
  require_nonnegative(unit_cost, "c");
  require_nonnegative(deterrence_pirate, "D_P");
  require_nonnegative(deterrence_industry, "D_I");
  require_nonnegative(patent_investment, "INV");
  require_nonnegative(entrance_cost, "f");
}

double competitive_profit(const MarketParams& params, double deterrence) {
  params.validate();
  require_nonnegative(deterrence, "deterrence");
  return params.price * (params.demand / params.producers) - params.unit_cost - deterrence;
}

double monopoly_profit(const MarketParams& params) {
  params.validate();
  return params.price * params.demand - params.unit_cost;
}

double free_entry_n(const MarketParams& params, double deterrence) {
  params.validate();
  require_nonnegative(deterrence, "deterrence");
  const double per_firm_cost = params.unit_cost + deterrence;
  if (per_firm_cost <= 0.0)
    throw UnboundedEntry("unbounded entry: c + D = 0, profit never reaches zero");
  return params.price * params.demand / per_firm_cost;
}

long long whole_producers(double n) { return static_cast<long long>(std::floor(n)); }

double healer_profit(const MarketParams& params) {
  params.validate();
  return params.price * (params.demand / params.producers) - params.unit_cost;
}

double bioprospector_profit(const MarketParams& params) {
  params.validate();
  return params.price * params.demand - params.unit_cost - params.patent_investment;
}

NormalFormGame build_carcass_game(double prize) {
  if (!(prize > 0.0) || !std::isfinite(prize))
    throw ContractViolation("carcass size Q must be positive");
  const double half = prize / 2.0;
  return NormalFormGame({labels::kFight, labels::kLeave}, {labels::kFight, labels::kLeave},
                        {{{half, half}, {prize, 0.0}}, {{0.0, prize}, {0.0, 0.0}}});
}

NormalFormGame build_deterrence_game(double prize, double d1, double d2) {
  if (!(prize > 0.0) || !std::isfinite(prize)) throw ContractViolation("prize Q must be positive");
  require_nonnegative(d1, "d1");
  require_nonnegative(d2, "d2");
  const double half = prize / 2.0;
  return NormalFormGame({labels::kBlockade, labels::kAccommodate},
                        {labels::kBlockade, labels::kAccommodate},
                        {{{half - d1, half - d2}, {prize, 0.0}}, {{0.0, prize}, {0.0, 0.0}}});
}

NormalFormGame build_entry_game(const MarketParams& params) {
  const double pirate = competitive_profit(params, params.deterrence_pirate);
  const double industry = competitive_profit(params, params.deterrence_industry);
  const double monopoly = monopoly_profit(params);
  return NormalFormGame({labels::kBlockade, labels::kAccommodate},
                        {labels::kBlockade, labels::kAccommodate},
                        {{{pirate, industry}, {monopoly, 0.0}}, {{0.0, monopoly}, {0.0, 0.0}}});
}

NormalFormGame build_dynamic_game(double pi_pirate, double pi_industry, double d_pirate,
                                  double d_industry) {
  require_nonnegative(d_pirate, "d_P");
  require_nonnegative(d_industry, "d_I");
  return NormalFormGame(
      {labels::kBlockade, labels::kAccommodate}, {labels::kBlockade, labels::kAccommodate},
      {{{pi_pirate - d_pirate, pi_industry - d_industry}, {pi_pirate, 0.0}},
       {{0.0, pi_industry}, {0.0, 0.0}}});
}

NormalFormGame build_bioprospecting_game(double pi_healer, double pi_bioprospector,
                                         double entrance_cost) {
  require_nonnegative(entrance_cost, "f");
  return NormalFormGame({labels::kBlockade, labels::kAccommodate},
                        {labels::kPatent, labels::kNotPatent},
                        {{{pi_healer, pi_bioprospector - entrance_cost}, {pi_healer, 0.0}},
                         {{0.0, pi_bioprospector}, {pi_healer, 0.0}}});
}

}  // namespace attrition
