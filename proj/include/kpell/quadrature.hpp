#pragma once

#include <vector>

namespace kpell {

// Gauss-Legendre rule on [-1, 1]: m nodes integrate polynomials of degree
// <= 2m-1 exactly. Nodes are symmetric about 0, weights positive and summing
// to 2.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int m = 0;
};

// Nodes are the roots of the degree-m Legendre polynomial, found by Newton
// iteration from the cosine initial guess; weights are
// 2 / ((1 - x^2) P'_m(x)^2). Requires 1 <= m <= 256.
QuadratureRule legendre_rule(int m);

// Read-mostly cache keyed by m; safe for concurrent readers.
const QuadratureRule& cached_legendre_rule(int m);

template <class F>
double quad_integrate(const QuadratureRule& rule, F&& f) {
  double acc = 0.0;
  for (int i = 0; i < rule.m; ++i) acc += rule.weights[i] * f(rule.nodes[i]);
  return acc;
}

} // namespace kpell
