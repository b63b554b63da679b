#pragma once

#include <string>
#include <vector>

#include "dpp/kernels.hpp"
#include "dpp/linalg.hpp"
#include "dpp/quadrature.hpp"

namespace dpp {

struct Interval {
  double a = 0.0, b = 0.0;
  double length() const { return b - a; }
};

struct ClampReport {
  int clamped = 0;             // eigenvalues nudged into [0,1]
  double max_excursion = 0.0;  // worst distance outside [0,1] before clamping
};

// Operator spectrum on a region: eigenvalues of the integral operator with the
// given kernel, discretized by Gauss-Legendre Nystrom quadrature.
struct Spectrum {
  std::vector<double> lambdas;  // descending, clamped into [0,1]
  ClampReport clamp_report;
  Interval region;
  std::string kernel_name;
  int quad_order = 0;

  double trace() const;  // sum of lambdas

  // Eigenvalues kept for counting convolutions: lambda >= 1e-16. The dropped
  // tail is only discarded when its total mass is below 1e-12; otherwise
  // everything is kept.
  std::vector<double> retained() const;
};

// Symmetrized Nystrom matrix A_ij = sqrt(w_i) K(x_i,x_j) sqrt(w_j) on the
// mapped rule; A is exactly symmetric by construction.
Matrix nystrom_matrix(const Kernel& kernel, const QuadratureRule& mapped_rule,
                      Exec ex = Exec::parallel);

// Full pipeline: rule on the region, Nystrom matrix, symmetric eigensolve,
// clamping (excursions > 1e-9 outside [0,1] are rejected with
// non_contractive_operator), and the trace consistency check
// |sum lambda - sum w_i K(x_i,x_i)| <= 1e-10 max(1, trace).
// Requires order >= 20 and a finite region.
Spectrum nystrom_spectrum(const Kernel& kernel, Interval region, int order,
                          Exec ex = Exec::parallel);

// Generating-function value Xi(1-xi) = prod_l (1 - xi lambda_l), evaluated in
// log space when every factor is positive.
double fredholm_det(const Spectrum& spec, double xi);

// Zeros of the generating function: z_l = -(1-lambda_l)/lambda_l for retained
// eigenvalues lambda_l in (1e-14, 1). All strictly negative.
std::vector<double> xi_zeros(const Spectrum& spec);

struct TraceMoments {
  double mu = 0.0;      // sum_i w_i K(x_i,x_i)
  double sigma2 = 0.0;  // mu - sum_ij w_i w_j K(x_i,x_j)^2
};

// Mean and variance of the count from quadrature traces alone (no
// eigensolve); cross-checks the spectral route.
TraceMoments trace_mean_variance(const Kernel& kernel, Interval region, int order,
                                 Exec ex = Exec::parallel);

}  // namespace dpp
