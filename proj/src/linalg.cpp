#include "dpp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dpp/errors.hpp"

namespace dpp {

namespace {

// Householder reduction of a full symmetric matrix to tridiagonal (d, e).
// Operates on the full matrix (both triangles): twice the flops of the packed
// variant, but every O(n^2) inner stage becomes an independent-rows loop whose
// parallel version is bit-identical to the serial one.
void tridiagonalize(Matrix& A, std::vector<double>& d, std::vector<double>& e,
                    bool parallel) {
  const int n = A.n;
  d.assign(n, 0.0);
  e.assign(n > 1 ? n - 1 : 0, 0.0);
  std::vector<double> v(n), p(n), w(n);

  for (int k = 0; k + 2 < n; ++k) {
    double scale = 0.0;
    for (int i = k + 1; i < n; ++i) scale += std::abs(A(i, k));
    if (scale == 0.0) {
      e[k] = 0.0;
      continue;
    }
    double sigma = 0.0;
    for (int i = k + 1; i < n; ++i) {
      v[i] = A(i, k) / scale;
      sigma += v[i] * v[i];
    }
    const double x0 = v[k + 1];
    const double alpha = x0 >= 0.0 ? -std::sqrt(sigma) : std::sqrt(sigma);
    const double kk = sigma - x0 * alpha;  // = v^T v / 2 after the update below
    e[k] = scale * alpha;
    v[k + 1] = x0 - alpha;

    // p = A v / kk over the trailing block; one serial dot product per row
    auto row_p = [&](int i) {
      double acc = 0.0;
      const double* Ai = &A.a[static_cast<size_t>(i) * n];
      for (int j = k + 1; j < n; ++j) acc += Ai[j] * v[j];
      p[i] = acc / kk;
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (int i = k + 1; i < n; ++i) row_p(i);
    } else {
      for (int i = k + 1; i < n; ++i) row_p(i);
    }

    double vp = 0.0;
    for (int i = k + 1; i < n; ++i) vp += v[i] * p[i];
    const double kappa = vp / (2.0 * kk);
    for (int i = k + 1; i < n; ++i) w[i] = p[i] - kappa * v[i];

    // rank-2 update A <- A - v w^T - w v^T on the trailing block
    auto row_update = [&](int i) {
      double* Ai = &A.a[static_cast<size_t>(i) * n];
      const double vi = v[i], wi = w[i];
      for (int j = k + 1; j < n; ++j) Ai[j] -= vi * w[j] + wi * v[j];
    };
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (int i = k + 1; i < n; ++i) row_update(i);
    } else {
      for (int i = k + 1; i < n; ++i) row_update(i);
    }
  }

  if (n > 1) e[n - 2] = A(n - 1, n - 2);
  for (int i = 0; i < n; ++i) d[i] = A(i, i);
}

// Implicit-shift QL iteration on a symmetric tridiagonal matrix; eigenvalues
// only, unsorted in-place in d.
void ql_eigenvalues(std::vector<double>& d, std::vector<double>& e) {
  const int n = static_cast<int>(d.size());
  if (n <= 1) return;
  const double eps = std::numeric_limits<double>::epsilon();
  e.push_back(0.0);  // sentinel e[n-1]

  // Absolute deflation floor: entries below eps * ||T|| are noise and the
  // purely relative test would demand |e| ~ eps^2 * ||T|| inside clusters of
  // numerically zero eigenvalues, stalling the shift iteration there. Zeroing
  // them perturbs eigenvalues by at most the floor (Weyl), far below every
  // tolerance downstream.
  double dmax = 0.0, emax = 0.0;
  for (double x : d) dmax = std::max(dmax, std::abs(x));
  for (double x : e) emax = std::max(emax, std::abs(x));
  const double floor_abs = eps * (dmax + 2.0 * emax) + 1e-300;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd + floor_abs) break;
      }
      if (m == l) break;
      if (++iter > 50)
        throw numeric_error("symmetric_eigenvalues: QL iteration failed to converge");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, pp = 0.0;
      bool underflow = false;
      for (int i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= pp;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - pp;
        r = (d[i] - g) * s + 2.0 * c * b;
        pp = s * r;
        d[i + 1] = g + pp;
        g = c * r - b;
      }
      if (underflow) continue;
      d[l] -= pp;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }
  e.pop_back();
}

}  // namespace

std::vector<double> symmetric_eigenvalues(Matrix A, Exec ex) {
  if (A.n < 1) throw std::invalid_argument("symmetric_eigenvalues: empty matrix");
  std::vector<double> d, e;
  tridiagonalize(A, d, e, ex == Exec::parallel);
  ql_eigenvalues(d, e);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& h,
                                          int n, Exec ex) {
  if (n < 1 || h.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("hermitian_eigenvalues: bad dimensions");
  Matrix M(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double x = h[static_cast<size_t>(i) * n + j].real();
      const double y = h[static_cast<size_t>(i) * n + j].imag();
      M(i, j) = x;
      M(i + n, j + n) = x;
      M(i, j + n) = -y;
      M(i + n, j) = y;
    }
  std::vector<double> ev = symmetric_eigenvalues(std::move(M), ex);
  // eigenvalues come in pairs; average adjacent sorted pairs
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = 0.5 * (ev[2 * i] + ev[2 * i + 1]);
  return out;
}

}  // namespace dpp
