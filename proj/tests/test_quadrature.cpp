#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "dpp/quadrature.hpp"

using namespace dpp;

namespace {

// Legendre polynomial value at x by the three-term recurrence.
double legendre_value(int n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return p0;
  for (int m = 2; m <= n; ++m) {
    const double p2 = ((2.0 * m - 1.0) * x * p1 - (m - 1.0) * p0) / m;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

double integrate(const QuadratureRule& rule, double (*f)(double)) {
  double s = 0.0;
  for (int i = 0; i < rule.order(); ++i) s += rule.weights[i] * f(rule.nodes[i]);
  return s;
}

}  // namespace

TEST_CASE("gauss_legendre small orders match closed forms") {
  const QuadratureRule r1 = gauss_legendre(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

  const QuadratureRule r2 = gauss_legendre(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

  // Order 5 reference values (exact nodes of P_5 and their weights).
  const QuadratureRule r5 = gauss_legendre(5);
  CHECK(std::abs(r5.nodes[0] + 0.9061798459386640) <= 1e-15);
  CHECK(std::abs(r5.nodes[1] + 0.5384693101056831) <= 1e-15);
  CHECK(r5.nodes[2] == 0.0);
  CHECK(std::abs(r5.weights[0] - 0.2369268850561891) <= 1e-15);
  CHECK(std::abs(r5.weights[1] - 0.4786286704993665) <= 1e-15);
  CHECK(std::abs(r5.weights[2] - 128.0 / 225.0) <= 1e-15);
}

TEST_CASE("gauss_legendre symmetry and normalization are exact") {
  for (int n : {16, 61, 64, 201}) {
    const QuadratureRule r = gauss_legendre(n);
    REQUIRE(r.order() == n);
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(r.nodes[i] == -r.nodes[n - 1 - i]);      // bitwise mirror
      CHECK(r.weights[i] == r.weights[n - 1 - i]);   // bitwise mirror
      if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]); // strictly increasing
      CHECK(r.weights[i] > 0.0);
      wsum += r.weights[i];
    }
    if (n % 2 == 1) CHECK(r.nodes[n / 2] == 0.0);  // exact middle node
    CHECK(std::abs(wsum - 2.0) <= 1e-14 * n);
  }
}

TEST_CASE("gauss_legendre nodes are Legendre roots") {
  // The residual is evaluated through the three-term recurrence, whose own
  // rounding error grows with n; the bound scales accordingly.
  for (int n : {20, 60, 200}) {
    const QuadratureRule r = gauss_legendre(n);
    double worst = 0.0;
    for (double x : r.nodes) worst = std::max(worst, std::abs(legendre_value(n, x)));
    CHECK(worst <= 5e-15 * n);
  }
}

TEST_CASE("gauss_legendre integrates polynomials up to degree 2n-1") {
  const QuadratureRule r = gauss_legendre(20);
  for (int k = 0; k <= 39; ++k) {
    double s = 0.0;
    for (int i = 0; i < r.order(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
    const double exact = k % 2 == 0 ? 2.0 / (k + 1.0) : 0.0;
    CHECK(std::abs(s - exact) <= 1e-14);
  }
}

TEST_CASE("map_to_interval rescales nodes and weights") {
  const QuadratureRule r = map_to_interval(gauss_legendre(30), 2.0, 5.0);
  double wsum = 0.0, xint = 0.0;
  for (int i = 0; i < r.order(); ++i) {
    CHECK(r.nodes[i] > 2.0);
    CHECK(r.nodes[i] < 5.0);
    wsum += r.weights[i];
    xint += r.weights[i] * r.nodes[i];
  }
  CHECK(std::abs(wsum - 3.0) <= 1e-13);
  CHECK(std::abs(xint - 10.5) <= 1e-12);  // integral of x over (2,5)

  const QuadratureRule rs = map_to_interval(gauss_legendre(30), 0.0, M_PI);
  CHECK(std::abs(integrate(rs, [](double x) { return std::sin(x); }) - 2.0) <= 1e-14);
}

TEST_CASE("default_order policy") {
  CHECK(default_order(0.1) == 60);
  CHECK(default_order(10.0) == 60);
  CHECK(default_order(10.01) == 61);
  CHECK(default_order(100.0) == 600);
  CHECK(default_order(250.0) == 1500);
  CHECK_THROWS_AS(default_order(0.0), std::invalid_argument);
  CHECK_THROWS_AS(default_order(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(default_order(1e6), std::invalid_argument);
}

TEST_CASE("quadrature input validation") {
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(-3), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(2001), std::invalid_argument);
  CHECK_THROWS_AS(map_to_interval(gauss_legendre(5), 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(map_to_interval(gauss_legendre(5), 2.0, 1.0), std::invalid_argument);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(map_to_interval(gauss_legendre(5), 0.0, inf), std::invalid_argument);
}
