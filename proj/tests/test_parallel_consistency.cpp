// The parallel execution path must produce bit-identical results to the
// serial reference implementation, at any thread count: all reductions are
// ordered serially and parallel loops only partition independent rows.

#include <vector>

#include <doctest.h>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dpp/ensembles.hpp"
#include "dpp/fredholm.hpp"
#include "dpp/kernels.hpp"

using namespace dpp;

namespace {

void check_bitwise(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

}  // namespace

TEST_CASE("matrix assembly: serial == parallel bitwise") {
  for (const Kernel& k : {sine_kernel(), airy_kernel()}) {
    const Interval region = k.name() == "airy" ? Interval{-8.0, 12.0}
                                               : Interval{0.0, 10.0};
    const QuadratureRule rule =
        map_to_interval(gauss_legendre(90), region.a, region.b);
    const Matrix ms = nystrom_matrix(k, rule, Exec::serial);
    const Matrix mp = nystrom_matrix(k, rule, Exec::parallel);
    check_bitwise(ms.a, mp.a);
  }
}

TEST_CASE("eigensolve: serial == parallel bitwise") {
  const QuadratureRule rule = map_to_interval(gauss_legendre(120), 0.0, 10.0);
  const Matrix m = nystrom_matrix(sine_kernel(), rule, Exec::serial);
  check_bitwise(symmetric_eigenvalues(m, Exec::serial),
                symmetric_eigenvalues(m, Exec::parallel));
}

TEST_CASE("trace statistics: serial == parallel bitwise") {
  const TraceMoments a = trace_mean_variance(sine_kernel(), {0.0, 10.0}, 80,
                                             Exec::serial);
  const TraceMoments b = trace_mean_variance(sine_kernel(), {0.0, 10.0}, 80,
                                             Exec::parallel);
  CHECK(a.mu == b.mu);
  CHECK(a.sigma2 == b.sigma2);
}

TEST_CASE("full pipelines: serial == parallel bitwise") {
  const EnsembleResult bs = bulk_gue(10.0, 0, Exec::serial);
  const EnsembleResult bp = bulk_gue(10.0, 0, Exec::parallel);
  check_bitwise(bs.spectrum.lambdas, bp.spectrum.lambdas);
  check_bitwise(bs.distribution.probabilities, bp.distribution.probabilities);
  CHECK(bs.lclt.lclt_sup == bp.lclt.lclt_sup);
  CHECK(bs.lclt.clt_sup == bp.lclt.clt_sup);

  check_bitwise(gse_counts(6.0, 0, Exec::serial).probabilities,
                gse_counts(6.0, 0, Exec::parallel).probabilities);

  const auto sweep_s = bulk_spacing_sweep(0, 0.3, 0.1, 0, Exec::serial);
  const auto sweep_p = bulk_spacing_sweep(0, 0.3, 0.1, 0, Exec::parallel);
  REQUIRE(sweep_s.size() == sweep_p.size());
  for (size_t i = 0; i < sweep_s.size(); ++i) {
    CHECK(sweep_s[i].first == sweep_p[i].first);
    CHECK(sweep_s[i].second == sweep_p[i].second);
  }
}

#ifdef _OPENMP
TEST_CASE("results are invariant under the thread count") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const EnsembleResult one = bulk_gue(8.0);
  omp_set_num_threads(4);
  const EnsembleResult four = bulk_gue(8.0);
  omp_set_num_threads(saved);
  check_bitwise(one.spectrum.lambdas, four.spectrum.lambdas);
  check_bitwise(one.distribution.probabilities, four.distribution.probabilities);
}
#endif
