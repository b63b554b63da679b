#pragma once

#include <optional>
#include <vector>

namespace dpp {

// Exact counting distribution: probabilities[k] = probability of exactly k
// points, with its mean and variance.
struct CountDistribution {
  std::vector<double> probabilities;
  double mu = 0.0;
  double sigma2 = 0.0;
};

struct MeanVariance {
  double mu = 0.0;
  double sigma2 = 0.0;
};

// mu = sum lambda, sigma2 = sum lambda (1 - lambda); lambdas must lie in [0,1].
MeanVariance mean_variance(const std::vector<double>& lambdas);

// Law of a sum of independent Bernoulli(lambda_l) variables: E(k) is the
// coefficient of z^k in prod_l (1 - lambda_l + lambda_l z), computed by
// iterative convolution in ascending-lambda order. Validates the
// normalization and moment identities of the result.
CountDistribution poisson_binomial(std::vector<double> lambdas);

// Wraps explicitly given cell probabilities (mixtures, recursions): entries
// must be nonnegative and sum to 1 within 1e-12; moments are recomputed.
CountDistribution distribution_from_probabilities(std::vector<double> probs);

struct LogConcavity {
  bool ok = true;
  std::optional<int> first_violation;
};

// E(k)^2 >= E(k-1) E(k+1) (1 - 1e-10) for all interior k whose three entries
// are all >= floor.
LogConcavity log_concavity_check(const CountDistribution& dist, double floor = 1e-14);

// sup over integers k with E(k) > 1e-300 of |sigma E(k) - phi((k-mu)/sigma)|,
// phi the standard Gaussian density. The sup over real x of the cell-value
// comparison is attained on integer cells. Requires sigma2 > 0.
double lclt_distance(const CountDistribution& dist);

// Kolmogorov distance between the count cdf and the Gaussian cdf: both
// one-sided limits of every jump are tested. Requires sigma2 > 0.
double clt_distance(const CountDistribution& dist);

struct LcltRow {
  int k;
  double prob;      // E(k)
  double gaussian;  // phi((k-mu)/sigma)/sigma, the density approximation to E(k)
  double diff;      // prob - gaussian
};

struct LcltReport {
  double lclt_sup = 0.0;
  double clt_sup = 0.0;
  std::vector<LcltRow> per_k;
  bool log_concave = true;
  double floor_used = 1e-14;
};

LcltReport make_lclt_report(const CountDistribution& dist, double floor = 1e-14);

}  // namespace dpp
