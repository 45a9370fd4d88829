#include "kpell/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace kpell {

QuadratureRule legendre_rule(int m) {
  if (m < 1 || m > 256)
    throw std::invalid_argument("legendre_rule: m must be in [1, 256]");

  QuadratureRule rule;
  rule.m = m;
  rule.nodes.assign(m, 0.0);
  rule.weights.assign(m, 0.0);

  // Only the first half is computed; the rest follows by symmetry.
  int half = (m + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Cosine initial guess for the i-th root of P_m.
    double z = std::cos(M_PI * (i + 0.75) / (m + 0.5));
    double pp = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      // Evaluate P_m(z) by the three-term recurrence.
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= m; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = m * (z * p1 - p2) / (z * z - 1.0);
      double dz = -p1 / pp;
      z += dz;
      if (std::abs(dz) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw std::runtime_error("legendre_rule: Newton iteration stalled");

    // One more derivative evaluation at the converged node.
    double p1 = 1.0, p2 = 0.0;
    for (int j = 1; j <= m; ++j) {
      double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
    }
    pp = m * (z * p1 - p2) / (z * z - 1.0);

    double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[i] = -z;
    rule.nodes[m - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[m - 1 - i] = w;
  }
  // The middle root of an odd-order rule is exactly 0.
  if (m % 2 == 1) rule.nodes[m / 2] = 0.0;
  return rule;
}

const QuadratureRule& cached_legendre_rule(int m) {
  static std::shared_mutex mu;
  static std::map<int, std::unique_ptr<QuadratureRule>> cache;
  {
    std::shared_lock read(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto fresh = std::make_unique<QuadratureRule>(legendre_rule(m));
  std::unique_lock write(mu);
  auto [it, inserted] = cache.try_emplace(m, std::move(fresh));
  return *it->second;
}

} // namespace kpell
