#pragma once

#include <complex>
#include <functional>
#include <string>

namespace dpp {

enum class KernelSymmetry { real_symmetric, complex_hermitian };

// An evaluatable correlation kernel K(x,y). Immutable value type; conditioning
// composes by closure over the base kernel (see deflate).
class Kernel {
 public:
  Kernel(std::string name, KernelSymmetry symmetry,
         std::function<double(double, double)> eval)
      : name_(std::move(name)), symmetry_(symmetry), eval_(std::move(eval)) {}

  double operator()(double x, double y) const { return eval_(x, y); }
  const std::string& name() const { return name_; }
  KernelSymmetry symmetry() const { return symmetry_; }

 private:
  std::string name_;
  KernelSymmetry symmetry_;
  std::function<double(double, double)> eval_;
};

// sin(pi z)/(pi z), with the removable singularity filled in.
double sinc(double z);

// Translation-invariant bulk kernel K(x,y) = sinc(x-y); unit diagonal.
Kernel sine_kernel();

// (1/2)(K_sin(x-y) +/- K_sin(x+y)); sign must be +1 or -1.
// Diagonal (1/2)(1 +/- sinc(2x)).
Kernel sine_pm_kernel(int sign);

// Soft-edge kernel (Ai(x)Ai'(y) - Ai(y)Ai'(x)) / (x-y); the diagonal is the
// limit Ai'(x)^2 - x Ai(x)^2, used verbatim within |x-y| < 1e-4 (evaluated at
// the midpoint) because the quotient loses ~8 digits near the diagonal.
Kernel airy_kernel();

// Rank-one conditioning on a point at p:
//   K_p(x,y) = K(x,y) - K(x,p) K(p,y) / K(p,p).
// Requires K(p,p) > 1e-14, else degenerate_conditioning. Composable.
Kernel deflate(const Kernel& base, double p);

// Planar kernel (1/pi) e^{-(|w|^2+|z|^2)/2} e^{w conj(z)}; complex-Hermitian.
// Production disk runs use the explicit spectrum (ensembles module); this
// evaluatable form exists for the 2D cross-check oracle and symmetry tests.
struct PlanarGinibreKernel {
  std::complex<double> operator()(std::complex<double> w,
                                  std::complex<double> z) const;
};

}  // namespace dpp
