#include "dpp/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dpp/errors.hpp"
#include "dpp/special_functions.hpp"

namespace dpp {

namespace {

void require_positive(double s, const char* what) {
  if (!(s > 0.0) || !std::isfinite(s))
    throw std::invalid_argument(std::string(what) + ": parameter must be positive and finite");
}

double cell(const CountDistribution& d, int k) {
  if (k < 0) throw std::invalid_argument("cell count k must be >= 0");
  return static_cast<size_t>(k) < d.probabilities.size()
             ? d.probabilities[static_cast<size_t>(k)]
             : 0.0;
}

}  // namespace

EnsembleResult bulk_gue(double s, int order, Exec ex) {
  require_positive(s, "bulk_gue");
  if (order == 0) order = default_order(s);
  EnsembleResult r;
  r.ensemble = "gue-bulk";
  r.s = s;
  r.spectrum = nystrom_spectrum(sine_kernel(), {0.0, s}, order, ex);
  r.distribution = poisson_binomial(r.spectrum.retained());
  r.lclt = make_lclt_report(r.distribution);
  r.asymptotic_mu = s;  // unit density: the mean is the interval length
  if (s > 1.0) r.asymptotic_sigma2 = sine_variance_asymptotic(s);
  return r;
}

double sine_variance_asymptotic(double s) {
  if (!(s > 1.0))
    throw std::invalid_argument("sine_variance_asymptotic: requires s > 1");
  return (std::log(s) + kEulerGamma + 1.0 + std::log(2.0 * M_PI)) / (M_PI * M_PI);
}

EnsembleResult soft_edge(double s, int order, double truncation, Exec ex) {
  require_positive(s, "soft_edge");
  if (!(truncation > -s))
    throw std::invalid_argument("soft_edge: truncation must exceed -s");
  if (order == 0) order = default_order(s + truncation);
  EnsembleResult r;
  r.ensemble = "gue-soft";
  r.s = s;
  r.spectrum = nystrom_spectrum(airy_kernel(), {-s, truncation}, order, ex);
  r.distribution = poisson_binomial(r.spectrum.retained());
  r.lclt = make_lclt_report(r.distribution);
  r.asymptotic_mu = 2.0 * std::pow(s, 1.5) / (3.0 * M_PI);
  if (s > 1.0) r.asymptotic_sigma2 = 1.5 * std::log(s) / (2.0 * M_PI * M_PI);
  return r;
}

double conditioned_soft_density(int k, double s, int order, double truncation,
                                Exec ex) {
  if (k < 0) throw std::invalid_argument("conditioned_soft_density: k must be >= 0");
  const double wall = -s;
  if (!(wall < truncation))
    throw std::invalid_argument("conditioned_soft_density: wall is past the truncation");
  const AiryPair a = airy(wall);
  const double rho = a.aip * a.aip - wall * a.ai * a.ai;
  if (!(rho > 1e-14))
    throw degenerate_conditioning(
        "conditioned_soft_density: kernel diagonal at the wall is numerically zero");
  if (order == 0) order = default_order(truncation - wall);
  const Kernel cond = deflate(airy_kernel(), wall);
  const Spectrum spec = nystrom_spectrum(cond, {wall, truncation}, order, ex);
  const CountDistribution d = poisson_binomial(spec.retained());
  return rho * cell(d, k);
}

double bulk_spacing_density(int k, double s, int order, Exec ex) {
  if (k < 0) throw std::invalid_argument("bulk_spacing_density: k must be >= 0");
  require_positive(s, "bulk_spacing_density");
  const double sc = sinc(s);
  const double rho2 = 1.0 - sc * sc;
  if (!(rho2 > 1e-14))
    throw degenerate_conditioning(
        "bulk_spacing_density: two-point function vanishes at s=" + std::to_string(s));
  if (order == 0) order = default_order(s);
  const Kernel cond = deflate(deflate(sine_kernel(), 0.0), s);
  const Spectrum spec = nystrom_spectrum(cond, {0.0, s}, order, ex);
  const CountDistribution d = poisson_binomial(spec.retained());
  return rho2 * cell(d, k);
}

CountDistribution sine_parity_distribution(int sign, double L, int order, Exec ex) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sine_parity_distribution: sign must be +1 or -1");
  require_positive(L, "sine_parity_distribution");
  const double half = 0.5 * L;
  if (order == 0) order = default_order(half);
  const double sg = sign;
  const Kernel parity(sign > 0 ? "sine-even" : "sine-odd",
                      KernelSymmetry::real_symmetric, [sg](double x, double y) {
                        return sinc(x - y) + sg * sinc(x + y);
                      });
  const Spectrum spec = nystrom_spectrum(parity, {0.0, half}, order, ex);
  return poisson_binomial(spec.retained());
}

double e_plus_minus(int sign, int n, double s, int order, Exec ex) {
  if (n < 0) throw std::invalid_argument("e_plus_minus: n must be >= 0");
  return cell(sine_parity_distribution(sign, 2.0 * s, order, ex), n);
}

CountDistribution gse_counts(double s, int order, Exec ex) {
  require_positive(s, "gse_counts");
  const CountDistribution ep = sine_parity_distribution(+1, 2.0 * s, order, ex);
  const CountDistribution em = sine_parity_distribution(-1, 2.0 * s, order, ex);
  const size_t m = std::max(ep.probabilities.size(), em.probabilities.size());
  std::vector<double> e4(m, 0.0);
  for (size_t k = 0; k < m; ++k)
    e4[k] = 0.5 * (cell(ep, static_cast<int>(k)) + cell(em, static_cast<int>(k)));
  return distribution_from_probabilities(std::move(e4));
}

CountDistribution goe_counts(double s, int order, Exec ex) {
  require_positive(s, "goe_counts");
  const double L = 2.0 * s;
  const CountDistribution ep = sine_parity_distribution(+1, L, order, ex);
  const CountDistribution em = sine_parity_distribution(-1, L, order, ex);
  const size_t m = 2 * std::max(ep.probabilities.size(), em.probabilities.size());

  std::vector<double> e1(m, 0.0);
  e1[0] = cell(ep, 0);
  for (size_t j = 1; j < m; ++j) {
    const int n = static_cast<int>(j / 2);
    const double paired = (j % 2 == 0) ? cell(ep, n) : cell(em, n);
    e1[j] = paired - e1[j - 1];
  }

  double total = 0.0;
  for (double& v : e1) {
    if (v < 0.0) {
      if (v < -1e-10)
        throw convention_error("goe_counts: recursion produced probability " +
                               std::to_string(v));
      v = 0.0;
    }
    total += v;
  }
  if (std::abs(total - 1.0) >= 1e-8)
    throw convention_error("goe_counts: recursion total " + std::to_string(total) +
                           " too far from 1");
  for (double& v : e1) v /= total;
  while (!e1.empty() && e1.back() == 0.0) e1.pop_back();
  return distribution_from_probabilities(std::move(e1));
}

EnsembleResult ginibre_disk(double R, int l_max) {
  require_positive(R, "ginibre_disk");
  const double r2 = R * R;
  const int auto_lmax = static_cast<int>(std::ceil(r2 + 10.0 * R + 20.0));
  if (l_max < 0) l_max = auto_lmax;
  if (l_max < 1) throw std::invalid_argument("ginibre_disk: l_max must be >= 1");

  EnsembleResult r;
  r.ensemble = "ginibre-disk";
  r.s = R;
  r.spectrum.region = {0.0, R};
  r.spectrum.kernel_name = "ginibre-disk";
  r.spectrum.quad_order = 0;
  r.spectrum.lambdas.reserve(l_max + 1);
  for (int l = 0; l <= l_max; ++l)
    r.spectrum.lambdas.push_back(regularized_lower_gamma(l + 1, r2));

  // tail mass beyond l_max must be negligible
  double tail = 0.0;
  for (int l = l_max + 1; l <= l_max + 400; ++l) {
    const double p = regularized_lower_gamma(l + 1, r2);
    tail += p;
    if (p < 1e-20) break;
  }
  if (tail >= 1e-12)
    throw truncation_error("ginibre_disk: spectrum truncated at l_max=" +
                           std::to_string(l_max) + " drops tail mass " +
                           std::to_string(tail));
  const double tr = r.spectrum.trace();
  if (std::abs(tr - r2) > 1e-10 * std::max(1.0, r2))
    throw truncation_error("ginibre_disk: trace " + std::to_string(tr) +
                           " disagrees with R^2");

  r.distribution = poisson_binomial(r.spectrum.retained());
  r.lclt = make_lclt_report(r.distribution);
  r.asymptotic_mu = r2;
  r.asymptotic_sigma2 = ginibre_sigma2_asymptotic(2.0 * M_PI * R);
  return r;
}

double ginibre_sigma2_asymptotic(double perimeter) {
  if (!(perimeter > 0.0))
    throw std::invalid_argument("ginibre_sigma2_asymptotic: perimeter must be positive");
  return perimeter / (2.0 * std::pow(M_PI, 1.5));
}

std::vector<std::pair<double, double>> bulk_spacing_sweep(int k, double smax,
                                                          double step, int order,
                                                          Exec ex) {
  if (k < 0) throw std::invalid_argument("bulk_spacing_sweep: k must be >= 0");
  require_positive(smax, "bulk_spacing_sweep");
  require_positive(step, "bulk_spacing_sweep step");
  const int count = static_cast<int>(std::floor(smax / step + 1e-9));
  std::vector<std::pair<double, double>> rows(count + 1);
  rows[0] = {0.0, 0.0};  // limit value at zero spacing
  auto job = [&](int i) {
    const double s = i * step;
    rows[i] = {s, bulk_spacing_density(k, s, order, Exec::serial)};
  };
  if (ex == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 1; i <= count; ++i) job(i);
  } else {
    for (int i = 1; i <= count; ++i) job(i);
  }
  return rows;
}

std::vector<std::pair<double, double>> soft_spacing_sweep(int k, double smin,
                                                          double smax, double step,
                                                          int order, double truncation,
                                                          Exec ex) {
  if (k < 0) throw std::invalid_argument("soft_spacing_sweep: k must be >= 0");
  if (!(smin < smax)) throw std::invalid_argument("soft_spacing_sweep: need smin < smax");
  require_positive(step, "soft_spacing_sweep step");
  const int count = static_cast<int>(std::floor((smax - smin) / step + 1e-9));
  std::vector<std::pair<double, double>> rows(count + 1);
  auto job = [&](int i) {
    const double s = smin + i * step;
    const double wall = -s;
    double p = 0.0;
    if (wall < truncation - 1.0) {
      const AiryPair a = airy(wall);
      const double rho = a.aip * a.aip - wall * a.ai * a.ai;
      if (rho > 1e-14)
        p = conditioned_soft_density(k, s, order, truncation, Exec::serial);
    }
    rows[i] = {s, p};
  };
  if (ex == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i <= count; ++i) job(i);
  } else {
    for (int i = 0; i <= count; ++i) job(i);
  }
  return rows;
}

}  // namespace dpp
