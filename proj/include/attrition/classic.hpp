#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace attrition {

/// Symmetric continuous war of attrition: both contestants pay `cost_rate`
/// per unit of persistence time until one quits; the other takes `prize`.
class AttritionContest {
 public:
  AttritionContest(double prize, double cost_rate);

  double prize() const { return prize_; }
  double cost_rate() const { return cost_rate_; }
  /// Mean persistence time under the ESS, V/k.
  double scale() const { return prize_ / cost_rate_; }

 private:
  double prize_;
  double cost_rate_;
};

/// ESS persistence-time density (k/V) exp(-k x / V).
double ess_density(const AttritionContest& contest, double x);

/// Cumulative distribution of the ESS persistence time.
double ess_cdf(const AttritionContest& contest, double x);

/// Expected payoff of persisting exactly `x` against an ESS opponent, by
/// adaptive Gauss-Kronrod quadrature of the winning branch plus the closed
/// form losing branch. Identically zero at the ESS.
double payoff_vs_ess(const AttritionContest& contest, double x);

/// Deterministic inverse-CDF sampler of ESS persistence times. The stream
/// depends only on the seed and V/k.
class PersistenceSampler {
 public:
  PersistenceSampler(const AttritionContest& contest, std::uint64_t seed);

  double next();

 private:
  double scale_;
  std::mt19937_64 engine_;
};

std::vector<double> sample_persistence(const AttritionContest& contest, std::uint64_t seed,
                                       std::size_t count);

/// Payoff to a contestant persisting `own` against one persisting `other`.
/// Ties split the prize.
double contest_payoff(const AttritionContest& contest, double own, double other);

struct LevelOutcome {
  double level = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
};

/// Plays each pure persistence level against `rounds` independent ESS
/// opponents. Level i draws opponents from its own stream derived from
/// (seed, i), so a longer run extends a shorter one.
std::vector<LevelOutcome> simulate_tournament(const AttritionContest& contest,
                                              std::span<const double> levels, std::uint64_t seed,
                                              std::size_t rounds);

}  // namespace attrition
