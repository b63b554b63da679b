#pragma once

namespace dpp {

struct AiryPair {
  double ai;
  double aip;
};

// Ai(x) and Ai'(x) for x in [-40, 20].
// Accuracy: absolute error <= 1e-11 for x <= 0, relative error <= 1e-10 for
// x > 0. Outside the supported range -> std::domain_error.
AiryPair airy(double x);
double airy_ai(double x);
double airy_ai_prime(double x);

// Regularized lower incomplete gamma P(a,x) for integer a >= 1 and x >= 0;
// equals 1 - e^{-x} sum_{j<a} x^j/j!. Result in [0,1].
double regularized_lower_gamma(int a, double x);

// Standard Gaussian density and distribution function.
double gaussian_pdf(double x);
double gaussian_cdf(double x);

}  // namespace dpp
