#include "attrition/classic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "attrition/error.hpp"

namespace attrition {

namespace {

void require_time(double x) {
  if (!(x >= 0.0) || !std::isfinite(x))
    throw ContractViolation("persistence time must be finite and non-negative");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

AttritionContest::AttritionContest(double prize, double cost_rate)
    : prize_(prize), cost_rate_(cost_rate) {
  if (!(prize > 0.0) || !std::isfinite(prize))
    throw ContractViolation("prize V must be positive and finite");
  if (!(cost_rate > 0.0) || !std::isfinite(cost_rate))
    throw ContractViolation("cost rate k must be positive and finite");
}

double ess_density(const AttritionContest& contest, double x) {
  require_time(x);
  return std::exp(-x / contest.scale()) / contest.scale();
}

double ess_cdf(const AttritionContest& contest, double x) {
  require_time(x);
  return -std::expm1(-x / contest.scale());
}

double payoff_vs_ess(const AttritionContest& contest, double x) {
  require_time(x);
  if (x == 0.0) return 0.0;
  const double v = contest.prize();
  const double k = contest.cost_rate();
  auto win = [&](double y) { return (v - k * y) * ess_density(contest, y); };
  using Quadrature = boost::math::quadrature::gauss_kronrod<double, 61>;
  const double won = Quadrature::integrate(win, 0.0, x, 15, 1e-13);
  const double lost = k * x * (1.0 - ess_cdf(contest, x));
  return won - lost;
}

PersistenceSampler::PersistenceSampler(const AttritionContest& contest, std::uint64_t seed)
    : scale_(contest.scale()), engine_(seed) {}

double PersistenceSampler::next() {
  // 53 random bits mapped onto (0, 1].
  const double u = static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  const double x = -std::log(u) * scale_;
  return x == 0.0 ? 0.0 : x;
}

std::vector<double> sample_persistence(const AttritionContest& contest, std::uint64_t seed,
                                       std::size_t count) {
  if (count < 1) throw ContractViolation("sample count must be at least 1");
  PersistenceSampler sampler(contest, seed);
  std::vector<double> out(count);
  for (auto& x : out) x = sampler.next();
  return out;
}

double contest_payoff(const AttritionContest& contest, double own, double other) {
  const double k = contest.cost_rate();
  if (own > other) return contest.prize() - k * other;
  if (own < other) return 0.0 - k * own;
  return 0.5 * contest.prize() - k * own;
}

std::vector<LevelOutcome> simulate_tournament(const AttritionContest& contest,
                                              std::span<const double> levels, std::uint64_t seed,
                                              std::size_t rounds) {
  if (levels.empty()) throw ContractViolation("tournament needs at least one level");
  if (rounds < 1) throw ContractViolation("tournament needs at least one round");
  for (double level : levels) require_time(level);

  std::vector<LevelOutcome> out;
  out.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    PersistenceSampler opponents(contest, splitmix64(seed ^ splitmix64(i + 1)));
    // Welford running mean and sum of squared deviations.
    double mean = 0.0;
    double m2 = 0.0;
    for (std::size_t n = 1; n <= rounds; ++n) {
      const double payoff = contest_payoff(contest, levels[i], opponents.next());
      const double delta = payoff - mean;
      mean += delta / static_cast<double>(n);
      m2 += delta * (payoff - mean);
    }
    const double variance = rounds > 1 ? m2 / static_cast<double>(rounds - 1) : 0.0;
    out.push_back({levels[i], mean, std::sqrt(variance / static_cast<double>(rounds))});
  }
  return out;
}

}  // namespace attrition
