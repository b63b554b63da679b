#pragma once

#include <stdexcept>

namespace dpp {

// Base class for numerical-validation failures: the computation ran, but the
// result violated a validity contract. The CLI maps these to exit code 1,
// while std::invalid_argument / std::domain_error (bad inputs) map to 2.
struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operator eigenvalues escaped [0,1] by more than the clamp tolerance; the
// kernel is not a valid correlation kernel on the region, or the quadrature
// order is insufficient.
struct non_contractive_operator : numeric_error {
  using numeric_error::numeric_error;
};

// Conditioning (deflation) requested at a point where the kernel diagonal is
// numerically zero.
struct degenerate_conditioning : numeric_error {
  using numeric_error::numeric_error;
};

// A spectral truncation was too short: the dropped tail carries more mass
// than the tolerance allows.
struct truncation_error : numeric_error {
  using numeric_error::numeric_error;
};

// An inter-relation between ensembles (the even/odd recursion) produced a
// result that fails its normalization check.
struct convention_error : numeric_error {
  using numeric_error::numeric_error;
};

// A distribution with zero variance was handed to a Gaussian-comparison
// diagnostic.
struct degenerate_distribution : numeric_error {
  using numeric_error::numeric_error;
};

}  // namespace dpp
