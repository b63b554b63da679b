// Benchmark comparing the serial reference implementation against the
// OpenMP-parallel path for the three dense-matrix stages: kernel matrix
// assembly, symmetric eigenvalue extraction, and trace statistics.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dpp/fredholm.hpp"
#include "dpp/kernels.hpp"
#include "dpp/linalg.hpp"
#include "dpp/quadrature.hpp"

namespace {

using namespace dpp;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = Clock::now();
    f();
    const double dt = seconds_since(t0);
    if (dt < best) best = dt;
  }
  return best;
}

}  // namespace

int main() {
  const Kernel kernel = sine_kernel();
  const Interval region{0.0, 10.0};

#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not enabled; parallel path falls back to serial\n");
#endif
  std::printf("%-22s %6s %12s %12s %9s\n", "stage", "n", "serial[s]", "parallel[s]",
              "speedup");

  for (int n : {240, 480, 960}) {
    QuadratureRule rule = map_to_interval(gauss_legendre(n), region.a, region.b);
    const int reps = n <= 480 ? 3 : 2;

    Matrix ms(1), mp(1);
    const double t_asm_s =
        time_best_of(reps, [&] { ms = nystrom_matrix(kernel, rule, Exec::serial); });
    const double t_asm_p =
        time_best_of(reps, [&] { mp = nystrom_matrix(kernel, rule, Exec::parallel); });
    std::printf("%-22s %6d %12.4f %12.4f %8.2fx\n", "matrix assembly", n, t_asm_s,
                t_asm_p, t_asm_s / t_asm_p);

    std::vector<double> es, ep;
    const double t_eig_s =
        time_best_of(reps, [&] { es = symmetric_eigenvalues(ms, Exec::serial); });
    const double t_eig_p =
        time_best_of(reps, [&] { ep = symmetric_eigenvalues(mp, Exec::parallel); });
    std::printf("%-22s %6d %12.4f %12.4f %8.2fx\n", "eigenvalues", n, t_eig_s, t_eig_p,
                t_eig_s / t_eig_p);

    TraceMoments tm_s, tm_p;
    const double t_tr_s = time_best_of(
        reps, [&] { tm_s = trace_mean_variance(kernel, region, n, Exec::serial); });
    const double t_tr_p = time_best_of(
        reps, [&] { tm_p = trace_mean_variance(kernel, region, n, Exec::parallel); });
    std::printf("%-22s %6d %12.4f %12.4f %8.2fx\n", "trace statistics", n, t_tr_s,
                t_tr_p, t_tr_s / t_tr_p);

    // Sanity: the two paths must agree bit-for-bit.
    bool same = es.size() == ep.size() && tm_s.mu == tm_p.mu &&
                tm_s.sigma2 == tm_p.sigma2;
    for (size_t i = 0; same && i < es.size(); ++i) same = es[i] == ep[i];
    std::printf("%-22s %6d %25s\n", "bitwise agreement", n, same ? "yes" : "NO");
  }
  return 0;
}
