#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "dpp/counting.hpp"
#include "dpp/errors.hpp"
#include "oracles.hpp"

using namespace dpp;

TEST_CASE("single-trial distributions") {
  const CountDistribution half = poisson_binomial({0.5});
  REQUIRE(half.probabilities.size() == 2);
  CHECK(half.probabilities[0] == 0.5);
  CHECK(half.probabilities[1] == 0.5);
  CHECK(half.mu == 0.5);
  CHECK(half.sigma2 == 0.25);

  const CountDistribution sure = poisson_binomial({1.0});
  CHECK(sure.probabilities[0] == 0.0);
  CHECK(sure.probabilities[1] == 1.0);
  CHECK(sure.sigma2 == 0.0);

  const CountDistribution never = poisson_binomial({0.0});
  CHECK(never.probabilities[0] == 1.0);
  CHECK(never.probabilities[1] == 0.0);
}

TEST_CASE("convolution agrees with full enumeration") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    std::vector<double> lam(n);
    for (double& l : lam) l = u(rng);
    const CountDistribution d = poisson_binomial(lam);
    const std::vector<double> ref = oracle::poisson_binomial_enum(lam);
    REQUIRE(d.probabilities.size() == ref.size());
    for (size_t k = 0; k < ref.size(); ++k)
      CHECK(std::abs(d.probabilities[k] - ref[k]) <= 1e-14);
  }
}

TEST_CASE("convolution is permutation invariant") {
  std::vector<double> lam = {0.9, 0.1, 0.5, 0.33, 0.77, 0.02};
  const CountDistribution a = poisson_binomial(lam);
  std::reverse(lam.begin(), lam.end());
  const CountDistribution b = poisson_binomial(lam);
  REQUIRE(a.probabilities.size() == b.probabilities.size());
  for (size_t k = 0; k < a.probabilities.size(); ++k)
    CHECK(a.probabilities[k] == b.probabilities[k]);  // bitwise (sorted inside)
}

TEST_CASE("binomial special case against the closed form") {
  const int n = 1000;
  const double p = 0.3;
  const CountDistribution d = poisson_binomial(std::vector<double>(n, p));
  CHECK(std::abs(d.mu - n * p) <= 1e-9);
  CHECK(std::abs(d.sigma2 - n * p * (1 - p)) <= 1e-9);
  CHECK(std::abs(d.probabilities[300] - 0.027521003821268365) <= 1e-13);
  const double pmf420 = std::exp(std::lgamma(n + 1.0) - std::lgamma(421.0) -
                                 std::lgamma(n - 420.0 + 1.0) + 420.0 * std::log(p) +
                                 (n - 420.0) * std::log1p(-p));
  CHECK(std::abs(d.probabilities[420] - pmf420) <= 1e-12 * pmf420 + 1e-18);
}

TEST_CASE("moments and validation") {
  const MeanVariance mv = mean_variance({0.25, 0.75, 1.0});
  CHECK(mv.mu == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(mv.sigma2 == doctest::Approx(0.375).epsilon(1e-14));
  CHECK_THROWS_AS(mean_variance({1.5}), std::invalid_argument);
  CHECK_THROWS_AS(mean_variance({-0.1}), std::invalid_argument);
  CHECK_THROWS_AS(poisson_binomial({0.2, 1.0000001}), std::invalid_argument);
  CHECK_THROWS_AS(distribution_from_probabilities({0.5, -0.1, 0.6}),
                  std::invalid_argument);
  CHECK_THROWS_AS(distribution_from_probabilities({0.5, 0.4}), numeric_error);
}

TEST_CASE("distribution_from_probabilities recomputes moments") {
  const CountDistribution d = distribution_from_probabilities({0.25, 0.5, 0.25});
  CHECK(d.mu == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(d.sigma2 == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("log-concavity detection") {
  CHECK(log_concavity_check(poisson_binomial({0.3, 0.5, 0.9, 0.2})).ok);
  const CountDistribution bad = distribution_from_probabilities({0.45, 0.05, 0.5});
  const LogConcavity lc = log_concavity_check(bad);
  CHECK_FALSE(lc.ok);
  REQUIRE(lc.first_violation.has_value());
  CHECK(*lc.first_violation == 1);
  CHECK_THROWS_AS(log_concavity_check(bad, -1.0), std::invalid_argument);
}

TEST_CASE("Gaussian sup-distances: frozen small cases") {
  // One fair coin: sup_k |sigma E(k) - phi((k-mu)/sigma)| at k=0 or 1.
  CHECK(std::abs(lclt_distance(poisson_binomial({0.5})) - 0.0080292754808566) <=
        1e-13);
  // Two deterministic points plus a coin: Kolmogorov distance 0.341345.
  CHECK(std::abs(clt_distance(poisson_binomial({1.0, 1.0, 0.5})) -
                 0.34134474606854293) <= 1e-13);
  // Two coins: cdf jumps to 0.25 at 0 while the Gaussian cdf at 0- is 0.5.
  CHECK(std::abs(clt_distance(poisson_binomial({0.5, 0.5})) - 0.25) <= 1e-15);
  CHECK_THROWS_AS(lclt_distance(poisson_binomial({1.0})), degenerate_distribution);
  CHECK_THROWS_AS(clt_distance(poisson_binomial({0.0})), degenerate_distribution);
}

TEST_CASE("local limit distance vanishes for a large binomial") {
  const CountDistribution d = poisson_binomial(std::vector<double>(10000, 0.5));
  const double sup = lclt_distance(d);
  CHECK(sup > 0.0);
  CHECK(sup < 2e-5);  // ~1e-5 at sigma = 50; the integer-cell sup decays as 1/sigma^2
}

TEST_CASE("per-cell report is consistent with the distances") {
  const CountDistribution d = poisson_binomial({0.9, 0.8, 0.7, 0.1, 0.2});
  const LcltReport rep = make_lclt_report(d);
  CHECK(rep.lclt_sup == lclt_distance(d));
  CHECK(rep.clt_sup == clt_distance(d));
  CHECK(rep.log_concave == log_concavity_check(d).ok);
  REQUIRE(!rep.per_k.empty());
  const double sd = std::sqrt(d.sigma2);
  double seen_sup = 0.0;
  for (const auto& row : rep.per_k) {
    CHECK(row.prob == d.probabilities[row.k]);
    const double phi = std::exp(-0.5 * std::pow((row.k - d.mu) / sd, 2)) /
                       (sd * std::sqrt(2.0 * M_PI));
    CHECK(std::abs(row.gaussian - phi) <= 1e-15);
    CHECK(std::abs(row.diff - (row.prob - row.gaussian)) <= 1e-16);
    seen_sup = std::max(seen_sup, sd * std::abs(row.diff));
  }
  CHECK(std::abs(seen_sup - rep.lclt_sup) <= 1e-15);
}
