#pragma once

#include <complex>
#include <vector>

namespace dpp {

// Execution policy for code paths that have both a serial reference
// implementation and an OpenMP-parallel one. The parallel paths partition work
// by whole output rows (every reduction is computed serially by one thread),
// so results are bit-identical to the serial reference at any thread count.
enum class Exec { serial, parallel };

// Dense row-major square matrix of doubles.
struct Matrix {
  int n = 0;
  std::vector<double> a;
  explicit Matrix(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// All eigenvalues of a symmetric matrix, sorted ascending. Householder
// reduction to tridiagonal form followed by implicit-shift QL iteration
// (eigenvalues only).
std::vector<double> symmetric_eigenvalues(Matrix A, Exec ex = Exec::parallel);

// Eigenvalues of an n x n complex Hermitian matrix (row-major) via the doubled
// real-symmetric embedding [[X, -Y], [Y, X]]: each eigenvalue of the original
// appears twice, so adjacent sorted pairs are averaged back into n values.
// Sorted ascending.
std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& h,
                                          int n, Exec ex = Exec::parallel);

}  // namespace dpp
