#pragma once

#include "kpell/integral_reps.hpp"
#include "kpell/quadrature.hpp"
#include "kpell/report.hpp"

#include <functional>

namespace kpell {

// Largest integer magnitude a double represents exactly. Above this a
// floating comparison is meaningless, so verification skips instead of
// failing.
inline const Int& float_exact_cap() {
  static const Int cap = Int(1) << 53;
  return cap;
}

struct NumericIntegrand {
  long long degree = 0; // polynomial degree in x
  double prefactor = 1.0;
  std::function<double(double)> f;
};

// Floating-point integrand for a representation: sqrt(1+k) as a double,
// sequence values converted from the exact integers. For n = 0 the
// analytically simplified constant integrand is used (the general form would
// need exponent -1).
NumericIntegrand numeric_integrand(ReprId id, const ReprParams& p);

// Node count from the integrand degree with margin: m = ceil((deg+1)/2) + 2,
// so exactness is guaranteed and any miss implicates the implementation.
int rule_size_for_degree(long long degree);

double rhs_numeric(ReprId id, const ReprParams& p);

// Relative test |rhs - lhs| / max(1, |lhs|) <= tol; |lhs| > 2^53 reports
// SkippedOverflow, never fail.
VerificationReport verify_numeric(ReprId id, const ReprParams& p,
                                  double tol = 1e-12);

} // namespace kpell
