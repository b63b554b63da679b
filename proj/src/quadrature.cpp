#include "dpp/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dpp {

namespace {

struct LegendreEval {
  double p;   // P_n(x)
  double dp;  // P_n'(x)
};

// Three-term recurrence (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1};
// derivative from P_n' = n (x P_n - P_{n-1}) / (x^2 - 1).
LegendreEval legendre(int n, double x) {
  if (n == 0) return {1.0, 0.0};
  double pm1 = 1.0, p = x;
  for (int k = 1; k < n; ++k) {
    double pn = ((2.0 * k + 1.0) * x * p - k * pm1) / (k + 1.0);
    pm1 = p;
    p = pn;
  }
  double dp = (n == 0) ? 0.0 : n * (x * p - pm1) / (x * x - 1.0);
  return {p, dp};
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 2000)
    throw std::invalid_argument("gauss_legendre: order must be in [1, 2000], got " +
                                std::to_string(n));
  QuadratureRule r;
  r.nodes.assign(n, 0.0);
  r.weights.assign(n, 0.0);

  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th root counted from +1 downward
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    if (2 * i == n - 1) x = 0.0;  // middle root of an odd-order polynomial
    for (int iter = 0; iter < 100; ++iter) {
      LegendreEval e = legendre(n, x);
      double dx = e.p / e.dp;
      x -= dx;
      if (std::abs(dx) <= 4e-16 * (1.0 + std::abs(x))) break;
    }
    if (2 * i == n - 1) x = 0.0;
    LegendreEval e = legendre(n, x);
    double w = 2.0 / ((1.0 - x * x) * e.dp * e.dp);
    r.nodes[n - 1 - i] = x;
    r.nodes[i] = -x;
    r.weights[n - 1 - i] = w;
    r.weights[i] = w;
  }
  return r;
}

QuadratureRule map_to_interval(const QuadratureRule& rule, double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("map_to_interval: endpoints must be finite");
  if (!(a < b)) throw std::invalid_argument("map_to_interval: requires a < b");
  QuadratureRule r;
  const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
  r.nodes.reserve(rule.nodes.size());
  r.weights.reserve(rule.weights.size());
  for (double x : rule.nodes) r.nodes.push_back(mid + hw * x);
  for (double w : rule.weights) r.weights.push_back(hw * w);
  return r;
}

int default_order(double length) {
  if (!(length > 0.0) || !std::isfinite(length))
    throw std::invalid_argument("default_order: length must be positive and finite");
  int n = static_cast<int>(std::ceil(6.0 * length));
  if (n < 60) n = 60;
  if (n > 2000)
    throw std::invalid_argument("default_order: interval too long for the quadrature policy");
  return n;
}

}  // namespace dpp
