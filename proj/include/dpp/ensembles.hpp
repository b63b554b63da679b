#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpp/counting.hpp"
#include "dpp/fredholm.hpp"

namespace dpp {

inline constexpr double kEulerGamma = 0.57721566490153286;

// One fully-computed ensemble: spectrum (empty for the mixture ensembles,
// which have no single operator spectrum), counting distribution, Gaussian
// diagnostics, and the closed-form asymptotic moments where a formula exists.
struct EnsembleResult {
  std::string ensemble;
  double s = 0.0;
  Spectrum spectrum;
  CountDistribution distribution;
  LcltReport lclt;
  std::optional<double> asymptotic_mu;
  std::optional<double> asymptotic_sigma2;
};

// Bulk process: sine kernel on (0,s). order 0 selects the default policy.
EnsembleResult bulk_gue(double s, int order = 0, Exec ex = Exec::parallel);

// Large-s variance law for the bulk count on an interval of length s:
// (log s + euler_gamma + 1 + log 2pi) / pi^2. Requires s > 1.
double sine_variance_asymptotic(double s);

// Soft-edge process: Airy kernel on (-s, truncation). The infinite upper end
// is truncated (kernel diagonal decays super-exponentially).
// asymptotic_mu = 2 s^{3/2} / (3 pi), asymptotic_sigma2 = log(s^{3/2})/(2 pi^2).
EnsembleResult soft_edge(double s, int order = 0, double truncation = 12.0,
                         Exec ex = Exec::parallel);

// Density of the k-th largest point at position -s for the soft-edge process
// conditioned to have a point there:
//   p_soft(k; s) = rho(-s) * E_conditioned(k; (-s, truncation)),
// rho the Airy-kernel diagonal. Requires rho(-s) > 1e-14.
double conditioned_soft_density(int k, double s, int order = 0,
                                double truncation = 12.0, Exec ex = Exec::parallel);

// Bulk spacing density: sine kernel deflated at both 0 and s, counted on
// (0,s), scaled by the two-point function rho2(0,s) = 1 - sinc(s)^2.
double bulk_spacing_density(int k, double s, int order = 0, Exec ex = Exec::parallel);

// Counting distribution of the even (sign=+1) / odd (sign=-1) component of the
// sine process on a symmetric interval of length L: kernel
// sinc(x-y) + sign*sinc(x+y) on (0, L/2).
CountDistribution sine_parity_distribution(int sign, double L, int order = 0,
                                           Exec ex = Exec::parallel);

// E^{sign}(n; (0, 2s)): cell probability of the parity distribution at length 2s.
double e_plus_minus(int sign, int n, double s, int order = 0,
                    Exec ex = Exec::parallel);

// Symplectic-ensemble counts on (0,s):
//   E4(n; (0,s)) = (E^+(n; (0,2s)) + E^-(n; (0,2s))) / 2.
CountDistribution gse_counts(double s, int order = 0, Exec ex = Exec::parallel);

// Orthogonal-ensemble counts on (0,2s), recovered from the parity
// distributions at length 2s by the telescoping recursion anchored at
// E1(0) = E^+(0) (the anchor and pairing are fixed by the requirement that
// the small-interval gap probability behaves as 1 - |J|):
//   E1(2n)   = E^+(n) - E1(2n-1)
//   E1(2n+1) = E^-(n) - E1(2n)
// Negative round-off entries with |v| < 1e-10 are clipped to 0; the result is
// renormalized only if |sum - 1| < 1e-8, else convention_error.
CountDistribution goe_counts(double s, int order = 0, Exec ex = Exec::parallel);

// Disk process of the planar Gaussian ensemble: explicit spectrum
// lambda_l = P(l+1, R^2), l = 0..l_max (auto-sized when l_max < 0 so the
// dropped tail is below 1e-12, else truncation_error).
EnsembleResult ginibre_disk(double R, int l_max = -1);

// Perimeter variance law |dJ| / (2 pi^{3/2}).
double ginibre_sigma2_asymptotic(double perimeter);

// Sweeps over the spacing parameter; rows ordered by s. The s=0 row of the
// bulk sweep is the limit value 0. Fan-out is parallel; each job runs its
// eigensolve serially, and rows land at fixed indices, so results are
// identical to the serial path.
std::vector<std::pair<double, double>> bulk_spacing_sweep(int k, double smax,
                                                          double step, int order = 0,
                                                          Exec ex = Exec::parallel);
std::vector<std::pair<double, double>> soft_spacing_sweep(int k, double smin,
                                                          double smax, double step,
                                                          int order = 0,
                                                          double truncation = 12.0,
                                                          Exec ex = Exec::parallel);

}  // namespace dpp
