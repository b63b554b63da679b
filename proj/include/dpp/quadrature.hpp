#pragma once

#include <vector>

namespace dpp {

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // strictly positive
  int order() const { return static_cast<int>(nodes.size()); }
};

// Gauss-Legendre rule on the reference interval [-1,1].
// Nodes are the roots of the degree-n Legendre polynomial, found by Newton
// iteration from the cosine initial guess; exact for polynomials of degree
// <= 2n-1. Requires 1 <= n <= 2000.
QuadratureRule gauss_legendre(int n);

// Affine image of a rule on (a,b); requires a < b, both finite.
QuadratureRule map_to_interval(const QuadratureRule& rule, double a, double b);

// Default node count for an interval of the given length: at least 60, and at
// least 6 nodes per unit length so period-1 oscillatory kernels stay resolved
// on long intervals.
int default_order(double length);

}  // namespace dpp
