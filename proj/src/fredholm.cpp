#include "dpp/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "dpp/errors.hpp"

namespace dpp {

namespace {

constexpr double kClampLimit = 1e-9;      // excursion beyond this is an error
constexpr double kRetentionFloor = 1e-16; // lambdas below this may be dropped
constexpr double kZeroFloor = 1e-14;      // lambdas below this yield no zero

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

void check_region(const Interval& region) {
  if (!std::isfinite(region.a) || !std::isfinite(region.b) || !(region.a < region.b))
    throw std::invalid_argument("nystrom: region must be a finite interval with a < b");
}

}  // namespace

double Spectrum::trace() const { return kahan_sum(lambdas); }

std::vector<double> Spectrum::retained() const {
  std::vector<double> kept;
  kept.reserve(lambdas.size());
  double dropped = 0.0;
  for (double l : lambdas) {
    if (l >= kRetentionFloor)
      kept.push_back(l);
    else
      dropped += l;
  }
  if (dropped >= 1e-12) return lambdas;  // tail too heavy to discard
  return kept;
}

Matrix nystrom_matrix(const Kernel& kernel, const QuadratureRule& mapped_rule,
                      Exec ex) {
  const int n = mapped_rule.order();
  const auto& x = mapped_rule.nodes;
  std::vector<double> sw(n);
  for (int i = 0; i < n; ++i) sw[i] = std::sqrt(mapped_rule.weights[i]);

  Matrix A(n);
  // Each upper-triangle cell is computed once and mirrored, so A is exactly
  // symmetric; rows are independent, values do not depend on the schedule.
  auto fill_row = [&](int i) {
    for (int j = i; j < n; ++j) {
      const double v = sw[i] * kernel(x[i], x[j]) * sw[j];
      A(i, j) = v;
      A(j, i) = v;
    }
  };
  if (ex == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < n; ++i) fill_row(i);
  } else {
    for (int i = 0; i < n; ++i) fill_row(i);
  }
  return A;
}

Spectrum nystrom_spectrum(const Kernel& kernel, Interval region, int order, Exec ex) {
  check_region(region);
  if (order < 20)
    throw std::invalid_argument("nystrom_spectrum: order must be >= 20, got " +
                                std::to_string(order));

  const QuadratureRule rule = map_to_interval(gauss_legendre(order), region.a, region.b);

  std::vector<double> diag(order);
  for (int i = 0; i < order; ++i)
    diag[i] = rule.weights[i] * kernel(rule.nodes[i], rule.nodes[i]);
  const double trace_quad = kahan_sum(diag);

  Matrix A = nystrom_matrix(kernel, rule, ex);
  std::vector<double> ev = symmetric_eigenvalues(std::move(A), ex);

  Spectrum spec;
  spec.region = region;
  spec.kernel_name = kernel.name();
  spec.quad_order = order;
  spec.lambdas.assign(ev.rbegin(), ev.rend());  // descending

  for (double& l : spec.lambdas) {
    double exc = 0.0;
    if (l < 0.0)
      exc = -l;
    else if (l > 1.0)
      exc = l - 1.0;
    if (exc > 0.0) {
      if (exc > kClampLimit)
        throw non_contractive_operator(
            "nystrom_spectrum: kernel '" + kernel.name() + "' on (" +
            std::to_string(region.a) + ", " + std::to_string(region.b) +
            ") has eigenvalue " + std::to_string(l) + " outside [0,1] by " +
            std::to_string(exc));
      spec.clamp_report.clamped += 1;
      spec.clamp_report.max_excursion = std::max(spec.clamp_report.max_excursion, exc);
      l = l < 0.0 ? 0.0 : 1.0;
    }
  }

  const double tr = spec.trace();
  if (std::abs(tr - trace_quad) > 1e-10 * std::max(1.0, std::abs(trace_quad)))
    throw numeric_error("nystrom_spectrum: eigenvalue sum " + std::to_string(tr) +
                        " disagrees with quadrature trace " +
                        std::to_string(trace_quad));
  return spec;
}

double fredholm_det(const Spectrum& spec, double xi) {
  bool all_positive = true;
  for (double l : spec.lambdas)
    if (1.0 - xi * l <= 0.0) all_positive = false;
  if (all_positive) {
    double logsum = 0.0;
    for (double l : spec.lambdas) logsum += std::log1p(-xi * l);
    return std::exp(logsum);
  }
  double prod = 1.0;
  for (double l : spec.lambdas) prod *= 1.0 - xi * l;
  return prod;
}

std::vector<double> xi_zeros(const Spectrum& spec) {
  std::vector<double> zeros;
  for (double l : spec.lambdas)
    if (l > kZeroFloor && l < 1.0) zeros.push_back(-(1.0 - l) / l);
  return zeros;
}

TraceMoments trace_mean_variance(const Kernel& kernel, Interval region, int order,
                                 Exec ex) {
  check_region(region);
  if (order < 20)
    throw std::invalid_argument("trace_mean_variance: order must be >= 20");
  const QuadratureRule rule = map_to_interval(gauss_legendre(order), region.a, region.b);
  const auto& x = rule.nodes;
  const auto& w = rule.weights;

  std::vector<double> diag(order);
  for (int i = 0; i < order; ++i) diag[i] = w[i] * kernel(x[i], x[i]);
  const double mu = kahan_sum(diag);

  // sum_ij w_i w_j K_ij^2: per-row partial sums (serial within a row), then a
  // serial index-ordered combine, so the parallel path is bit-identical.
  std::vector<double> row_sums(order);
  auto fill_row = [&](int i) {
    double acc = 0.0;
    for (int j = 0; j < order; ++j) {
      const double k = kernel(x[i], x[j]);
      acc += w[i] * w[j] * k * k;
    }
    row_sums[i] = acc;
  };
  if (ex == Exec::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
    for (int i = 0; i < order; ++i) fill_row(i);
  } else {
    for (int i = 0; i < order; ++i) fill_row(i);
  }
  return {mu, mu - kahan_sum(row_sums)};
}

}  // namespace dpp
