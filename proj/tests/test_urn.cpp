#include <doctest.h>

#include <cmath>
#include <vector>

#include "rwag/errors.hpp"
#include "rwag/urn.hpp"

using namespace rwag;

TEST_CASE("urn_step updates") {
  SplitMix64 rng(8);
  int red_added = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) {
    UrnState s = urn_step({1, 1}, UrnRule::Polya, rng);
    CHECK(s.total() == 3);
    if (s.red == 2) ++red_added;
  }
  CHECK(std::abs(red_added / static_cast<double>(draws) - 0.5) < 0.01);

  // Polya (2,3): P(draw red) = 2/5.
  int red = 0;
  for (int i = 0; i < draws; ++i) {
    if (urn_step({2, 3}, UrnRule::Polya, rng).red == 3) ++red;
  }
  CHECK(std::abs(red / static_cast<double>(draws) - 0.4) < 0.01);

  // Friedman01 (3,1): red draw adds blue and vice versa.
  int to_32 = 0;
  for (int i = 0; i < draws; ++i) {
    UrnState s = urn_step({3, 1}, UrnRule::Friedman01, rng);
    CHECK(s.total() == 5);
    if (s.blue == 2) ++to_32;
  }
  CHECK(std::abs(to_32 / static_cast<double>(draws) - 0.75) < 0.01);

  CHECK_THROWS_AS(urn_step({0, 0}, UrnRule::Polya, rng), ValidationError);
}

TEST_CASE("urn_run martingale means") {
  std::vector<std::int64_t> cps{10, 100, 1000};
  const int replicas = 4000;

  // Polya (2,3): red fraction is a martingale with mean 2/5 at every n.
  for (std::size_t cp = 0; cp < cps.size(); ++cp) {
    double sum = 0.0, sumsq = 0.0;
    for (int r = 0; r < replicas; ++r) {
      SplitMix64 rng(derive_replica_seed(41, r));
      double f = urn_run({2, 3}, UrnRule::Polya, 1000, cps, rng)[cp];
      sum += f;
      sumsq += f * f;
    }
    double mean = sum / replicas;
    double var = (sumsq - replicas * mean * mean) / (replicas - 1);
    double se = std::sqrt(var / replicas);
    CHECK(std::abs(mean - 0.4) < 3.0 * se + 1e-12);
  }

  // Polya (1,1): symmetric, final mean 1/2.
  {
    std::vector<std::int64_t> last{1000};
    double sum = 0.0, sumsq = 0.0;
    for (int r = 0; r < replicas; ++r) {
      SplitMix64 rng(derive_replica_seed(43, r));
      double f = urn_run({1, 1}, UrnRule::Polya, 1000, last, rng)[0];
      sum += f;
      sumsq += f * f;
    }
    double mean = sum / replicas;
    double var = (sumsq - replicas * mean * mean) / (replicas - 1);
    CHECK(std::abs(mean - 0.5) < 3.0 * std::sqrt(var / replicas));
  }
}

TEST_CASE("Friedman01 pulls toward 1/2 and its spread contracts") {
  std::vector<std::int64_t> cps{100, 10000};
  const int replicas = 500;
  double sum = 0.0;
  double var_lo = 0.0, var_hi = 0.0, mean_lo = 0.0, mean_hi = 0.0;
  std::vector<double> lo, hi;
  for (int r = 0; r < replicas; ++r) {
    SplitMix64 rng(derive_replica_seed(47, r));
    auto fr = urn_run({5, 1}, UrnRule::Friedman01, 10000, cps, rng);
    lo.push_back(fr[0]);
    hi.push_back(fr[1]);
    sum += fr[1];
  }
  CHECK(std::abs(sum / replicas - 0.5) < 0.02);
  for (double x : lo) mean_lo += x;
  for (double x : hi) mean_hi += x;
  mean_lo /= replicas;
  mean_hi /= replicas;
  for (double x : lo) var_lo += (x - mean_lo) * (x - mean_lo);
  for (double x : hi) var_hi += (x - mean_hi) * (x - mean_hi);
  CHECK(var_hi / (replicas - 1) < var_lo / (replicas - 1));
}

TEST_CASE("exact_polya_pmf small cases") {
  // (1,1) after 2 draws: reds added uniform on {0,1,2}.
  auto pmf2 = exact_polya_pmf({1, 1}, 2);
  REQUIRE(pmf2.size() == 3);
  for (double m : pmf2) CHECK(m == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  // (1,1) stays uniform for all n (checked n <= 4 by the DP itself).
  for (int n = 1; n <= 4; ++n) {
    auto pmf = exact_polya_pmf({1, 1}, n);
    for (double m : pmf) {
      CHECK(m == doctest::Approx(1.0 / (n + 1)).epsilon(1e-12));
    }
  }

  // (2,3) single draw: P(red added) = 2/5.
  auto pmf1 = exact_polya_pmf({2, 3}, 1);
  CHECK(pmf1[1] == doctest::Approx(0.4).epsilon(1e-12));

  CHECK_THROWS_AS(exact_polya_pmf({2, 3}, 2000), ValidationError);
  CHECK_THROWS_AS(exact_polya_pmf({0, 1}, 5), ValidationError);
}

TEST_CASE("exact_polya_pmf mass and martingale identities") {
  auto pmf = exact_polya_pmf({2, 3}, 100);
  double mass = 0.0, mean_fraction = 0.0;
  for (std::size_t j = 0; j < pmf.size(); ++j) {
    mass += pmf[j];
    mean_fraction += pmf[j] * (2.0 + j) / (5.0 + 100.0);
  }
  CHECK(std::abs(mass - 1.0) < 1e-12);
  CHECK(std::abs(mean_fraction - 0.4) < 1e-12);
}

TEST_CASE("exact_polya_pmf matches Monte Carlo frequencies") {
  const int steps = 10, replicas = 100000;
  auto pmf = exact_polya_pmf({2, 3}, steps);
  std::vector<int> counts(steps + 1, 0);
  std::vector<std::int64_t> cps{steps};
  for (int r = 0; r < replicas; ++r) {
    SplitMix64 rng(derive_replica_seed(53, r));
    UrnState s{2, 3};
    for (int i = 0; i < steps; ++i) s = urn_step(s, UrnRule::Polya, rng);
    ++counts[s.red - 2];
  }
  double chi2 = 0.0;
  for (int j = 0; j <= steps; ++j) {
    double expected = replicas * pmf[j];
    chi2 += (counts[j] - expected) * (counts[j] - expected) / expected;
  }
  CHECK(chi2 < 29.588);  // chi-square df=10 at significance 0.001
}
