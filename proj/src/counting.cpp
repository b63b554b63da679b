#include "dpp/counting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dpp/errors.hpp"
#include "dpp/special_functions.hpp"

namespace dpp {

namespace {

double kahan_sum(const std::vector<double>& x) {
  double s = 0.0, c = 0.0;
  for (double v : x) {
    const double y = v - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

// Normalization and moment identities every produced distribution must satisfy.
void validate(const CountDistribution& d) {
  const auto& E = d.probabilities;
  const double total = kahan_sum(E);
  if (std::abs(total - 1.0) > 1e-12)
    throw numeric_error("count distribution: probabilities sum to " +
                        std::to_string(total) + ", not 1");
  double m1 = 0.0, c1 = 0.0;
  for (size_t k = 0; k < E.size(); ++k) {
    const double y = k * E[k] - c1;
    const double t = m1 + y;
    c1 = (t - m1) - y;
    m1 = t;
  }
  if (std::abs(m1 - d.mu) > 1e-10 * std::max(1.0, std::abs(d.mu)))
    throw numeric_error("count distribution: first moment " + std::to_string(m1) +
                        " disagrees with mu " + std::to_string(d.mu));
  double m2 = 0.0, c2 = 0.0;
  for (size_t k = 0; k < E.size(); ++k) {
    const double dk = k - d.mu;
    const double y = dk * dk * E[k] - c2;
    const double t = m2 + y;
    c2 = (t - m2) - y;
    m2 = t;
  }
  if (std::abs(m2 - d.sigma2) > 1e-9 * std::max(1.0, std::abs(d.sigma2)))
    throw numeric_error("count distribution: second moment " + std::to_string(m2) +
                        " disagrees with sigma2 " + std::to_string(d.sigma2));
}

void require_positive_variance(const CountDistribution& d) {
  if (!(d.sigma2 > 0.0))
    throw degenerate_distribution(
        "distribution has zero variance; no Gaussian comparison possible");
}

}  // namespace

MeanVariance mean_variance(const std::vector<double>& lambdas) {
  double mu = 0.0, cm = 0.0, s2 = 0.0, cs = 0.0;
  for (double l : lambdas) {
    if (!(l >= 0.0 && l <= 1.0))
      throw std::invalid_argument("mean_variance: lambda " + std::to_string(l) +
                                  " outside [0,1]");
    double y = l - cm, t = mu + y;
    cm = (t - mu) - y;
    mu = t;
    y = l * (1.0 - l) - cs;
    t = s2 + y;
    cs = (t - s2) - y;
    s2 = t;
  }
  return {mu, s2};
}

CountDistribution poisson_binomial(std::vector<double> lambdas) {
  for (double l : lambdas)
    if (!(l >= 0.0 && l <= 1.0))
      throw std::invalid_argument("poisson_binomial: lambda " + std::to_string(l) +
                                  " outside [0,1]");
  // ascending order empirically minimizes cancellation in the tails
  std::sort(lambdas.begin(), lambdas.end());

  CountDistribution d;
  d.probabilities.assign(1, 1.0);
  for (double l : lambdas) {
    auto& E = d.probabilities;
    E.push_back(0.0);
    for (size_t k = E.size() - 1; k >= 1; --k)
      E[k] = E[k] * (1.0 - l) + E[k - 1] * l;
    E[0] *= 1.0 - l;
  }
  const MeanVariance mv = mean_variance(lambdas);
  d.mu = mv.mu;
  d.sigma2 = mv.sigma2;
  validate(d);
  return d;
}

CountDistribution distribution_from_probabilities(std::vector<double> probs) {
  for (double p : probs)
    if (!(p >= 0.0))
      throw std::invalid_argument("distribution_from_probabilities: negative entry " +
                                  std::to_string(p));
  CountDistribution d;
  d.probabilities = std::move(probs);
  double m1 = 0.0;
  for (size_t k = 0; k < d.probabilities.size(); ++k) m1 += k * d.probabilities[k];
  d.mu = m1;
  double m2 = 0.0;
  for (size_t k = 0; k < d.probabilities.size(); ++k) {
    const double dk = k - d.mu;
    m2 += dk * dk * d.probabilities[k];
  }
  d.sigma2 = m2;
  validate(d);
  return d;
}

LogConcavity log_concavity_check(const CountDistribution& dist, double floor) {
  if (!(floor > 0.0))
    throw std::invalid_argument("log_concavity_check: floor must be positive");
  const auto& E = dist.probabilities;
  for (size_t k = 1; k + 1 < E.size(); ++k) {
    if (E[k - 1] < floor || E[k] < floor || E[k + 1] < floor) continue;
    if (E[k] * E[k] < E[k - 1] * E[k + 1] * (1.0 - 1e-10))
      return {false, static_cast<int>(k)};
  }
  return {true, std::nullopt};
}

double lclt_distance(const CountDistribution& dist) {
  require_positive_variance(dist);
  const double sd = std::sqrt(dist.sigma2);
  double sup = 0.0;
  for (size_t k = 0; k < dist.probabilities.size(); ++k) {
    const double e = dist.probabilities[k];
    if (!(e > 1e-300)) continue;
    const double z = (k - dist.mu) / sd;
    sup = std::max(sup, std::abs(sd * e - gaussian_pdf(z)));
  }
  return sup;
}

double clt_distance(const CountDistribution& dist) {
  require_positive_variance(dist);
  const double sd = std::sqrt(dist.sigma2);
  double sup = 0.0, cdf = 0.0;
  for (size_t k = 0; k < dist.probabilities.size(); ++k) {
    const double prev = cdf;
    cdf += dist.probabilities[k];
    const double target = gaussian_cdf((k - dist.mu) / sd);
    sup = std::max({sup, std::abs(cdf - target), std::abs(prev - target)});
  }
  return sup;
}

LcltReport make_lclt_report(const CountDistribution& dist, double floor) {
  require_positive_variance(dist);
  LcltReport rep;
  rep.floor_used = floor;
  const double sd = std::sqrt(dist.sigma2);
  for (size_t k = 0; k < dist.probabilities.size(); ++k) {
    const double e = dist.probabilities[k];
    if (!(e > 1e-300)) continue;
    const double g = gaussian_pdf((k - dist.mu) / sd) / sd;
    rep.per_k.push_back({static_cast<int>(k), e, g, e - g});
  }
  rep.lclt_sup = lclt_distance(dist);
  rep.clt_sup = clt_distance(dist);
  rep.log_concave = log_concavity_check(dist, floor).ok;
  return rep;
}

}  // namespace dpp
