#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "attrition/classic.hpp"
#include "attrition/error.hpp"
#include "doctest.h"

using namespace attrition;

namespace {

// Composite Simpson rule; independent of the library's Gauss-Kronrod path.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  if (intervals % 2) ++intervals;
  const double h = (b - a) / intervals;
  double sum = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

// Expected payoff of persisting x against the exponential ESS, from the
// explicit density formula and Simpson quadrature of the winning branch.
double payoff_oracle(double v, double k, double x) {
  const double rate = k / v;
  auto density = [&](double y) { return rate * std::exp(-rate * y); };
  const double won = simpson([&](double y) { return (v - k * y) * density(y); }, 0.0, x, 20000);
  return won - k * x * std::exp(-rate * x);
}

}  // namespace

TEST_CASE("contest validation") {
  CHECK_THROWS_AS(AttritionContest(0.0, 1.0), ContractViolation);
  CHECK_THROWS_AS(AttritionContest(-1.0, 1.0), ContractViolation);
  CHECK_THROWS_AS(AttritionContest(1.0, 0.0), ContractViolation);
  CHECK_THROWS_AS(AttritionContest(NAN, 1.0), ContractViolation);
  CHECK(AttritionContest(3.0, 2.0).scale() == doctest::Approx(1.5));
}

TEST_CASE("ess_density") {
  const AttritionContest c(2.0, 1.0);
  CHECK(ess_density(c, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ess_density(c, 2.0) == doctest::Approx(0.5 * std::exp(-1.0)).epsilon(1e-14));
  CHECK(ess_density(c, 2.0) == doctest::Approx(0.18394).epsilon(1e-5));
  CHECK_THROWS_AS(ess_density(c, -1e-12), ContractViolation);

  SUBCASE("normalisation over [0, 100 V/k]") {
    for (const auto& [v, k] : {std::pair{2.0, 1.0}, {3.0, 2.0}, {0.5, 7.0}}) {
      const AttritionContest contest(v, k);
      const double upper = 100.0 * v / k;
      const double mass =
          simpson([&](double x) { return ess_density(contest, x); }, 0.0, upper, 200000);
      CHECK(std::abs(mass - 1.0) < 1e-9);
    }
  }
  CHECK(ess_cdf(c, 2.0) == doctest::Approx(1.0 - std::exp(-1.0)));
}

TEST_CASE("payoff_vs_ess is zero everywhere") {
  CHECK(payoff_vs_ess(AttritionContest(2, 1), 0.0) == 0.0);
  CHECK(std::abs(payoff_vs_ess(AttritionContest(2, 1), 5.0)) < 1e-6);
  CHECK(std::abs(payoff_vs_ess(AttritionContest(3, 2), 1.0)) < 1e-6);
  // The independent oracle agrees.
  CHECK(std::abs(payoff_oracle(2, 1, 5.0)) < 1e-6);
  CHECK(std::abs(payoff_oracle(3, 2, 1.0)) < 1e-6);
  CHECK_THROWS_AS(payoff_vs_ess(AttritionContest(2, 1), -1.0), ContractViolation);

  SUBCASE("random contests on a 50-point grid, checked against the oracle") {
    std::mt19937_64 rng(1974);
    std::uniform_real_distribution<double> u(0.1, 20.0);
    for (int i = 0; i < 20; ++i) {
      const double v = u(rng), k = u(rng);
      const AttritionContest contest(v, k);
      for (int j = 0; j < 50; ++j) {
        const double x = 10.0 * v / k * j / 49.0;
        const double got = payoff_vs_ess(contest, x);
        CHECK(std::abs(got) < 1e-6);
        CHECK(std::abs(got - payoff_oracle(v, k, x)) < 1e-6);
      }
    }
  }

  SUBCASE("a non-ESS opponent breaks indifference") {
    // Against an opponent twice as persistent, quitting late costs more:
    // the oracle integral with rate k/(2V) gives a strictly negative payoff.
    const double v = 2, k = 1, rate = k / (2 * v), x = 4;
    const double won = simpson(
        [&](double y) { return (v - k * y) * rate * std::exp(-rate * y); }, 0.0, x, 2000);
    CHECK(won - k * x * std::exp(-rate * x) < -0.1);
  }
}

TEST_CASE("sample_persistence") {
  const AttritionContest c(2.0, 1.0);
  SUBCASE("mean within three standard errors") {
    const std::size_t n = 1000000;
    const auto xs = sample_persistence(c, 42, n);
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    CHECK(std::abs(mean - 2.0) < 3.0 * 2.0 / std::sqrt(double(n)));
    for (double x : xs) REQUIRE(x >= 0.0);
  }
  SUBCASE("deterministic for a fixed seed") {
    CHECK(sample_persistence(c, 7, 1) == sample_persistence(c, 7, 1));
    CHECK(sample_persistence(c, 7, 100) == sample_persistence(c, 7, 100));
    CHECK(sample_persistence(c, 7, 10) != sample_persistence(c, 8, 10));
  }
  SUBCASE("depends only on V/k") {
    CHECK(sample_persistence(AttritionContest(2, 2), 3, 1000) ==
          sample_persistence(AttritionContest(1, 1), 3, 1000));
  }
  SUBCASE("seed 0 reference values are frozen") {
    // mt19937_64 is fully specified by the standard; these values pin the
    // bit mapping onto (0, 1] and the inverse CDF.
    std::mt19937_64 engine(0);
    const double u = static_cast<double>((engine() >> 11) + 1) * 0x1.0p-53;
    CHECK(sample_persistence(c, 0, 1)[0] == -std::log(u) * 2.0);
  }
  CHECK_THROWS_AS(sample_persistence(c, 0, 0), ContractViolation);
}

TEST_CASE("contest_payoff conventions") {
  const AttritionContest c(2.0, 1.0);
  CHECK(contest_payoff(c, 3.0, 1.0) == doctest::Approx(1.0));   // win, pay for opponent's time
  CHECK(contest_payoff(c, 1.0, 3.0) == doctest::Approx(-1.0));  // lose, pay own time
  CHECK(contest_payoff(c, 1.5, 1.5) == doctest::Approx(-0.5));  // split V, pay own time
  CHECK(contest_payoff(c, 0.0, 0.5) == 0.0);
}

TEST_CASE("simulate_tournament") {
  const AttritionContest c(2.0, 1.0);
  const std::vector<double> levels{0.5, 2.0, 8.0};

  SUBCASE("every pure level earns zero against the ESS population") {
    const auto out = simulate_tournament(c, levels, 2024, 1000000);
    REQUIRE(out.size() == 3);
    for (const auto& o : out) {
      CHECK(o.std_error > 0.0);
      CHECK(std::abs(o.mean) < 3.0 * o.std_error);
    }
  }
  SUBCASE("level zero never wins and never pays") {
    const std::vector<double> zero{0.0};
    const auto out = simulate_tournament(c, zero, 1, 10000);
    CHECK(out[0].mean == 0.0);
    CHECK(out[0].std_error == 0.0);
  }
  SUBCASE("doubling rounds shrinks the standard error by about 1/sqrt(2)") {
    const auto small = simulate_tournament(c, levels, 77, 200000);
    const auto large = simulate_tournament(c, levels, 77, 400000);
    for (std::size_t i = 0; i < levels.size(); ++i) {
      const double ratio = large[i].std_error / small[i].std_error;
      CHECK(ratio == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(0.05));
    }
  }
  SUBCASE("bit-identical reruns") {
    const auto a = simulate_tournament(c, levels, 5, 1000);
    const auto b = simulate_tournament(c, levels, 5, 1000);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].mean == b[i].mean);
      CHECK(a[i].std_error == b[i].std_error);
    }
  }
  SUBCASE("contract") {
    CHECK_THROWS_AS(simulate_tournament(c, std::vector<double>{}, 0, 10), ContractViolation);
    CHECK_THROWS_AS(simulate_tournament(c, std::vector<double>{-1.0}, 0, 10), ContractViolation);
    CHECK_THROWS_AS(simulate_tournament(c, levels, 0, 0), ContractViolation);
  }
}
