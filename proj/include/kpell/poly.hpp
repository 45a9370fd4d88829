#pragma once

#include "kpell/ring.hpp"

#include <string>
#include <vector>

namespace kpell {

// Polynomial in x with RingRat coefficients; coeffs[j] multiplies x^j.
// Normalized form has no trailing zero coefficient (the zero polynomial has
// an empty coefficient list).
struct RingPoly {
  std::vector<RingRat> coeffs;
  long long d = 2;
};

RingPoly make_poly(std::vector<RingRat> coeffs, long long d);
void poly_normalize(RingPoly& p);
long long poly_degree(const RingPoly& p); // -1 for the zero polynomial
bool poly_is_zero(const RingPoly& p);

// (c0 + c1 x)^e expanded with exact big-integer binomials. A zero c1 (or c0)
// falls out of the same loop; no special-casing.
RingPoly expand_linear_power(const RingRat& c0, const RingRat& c1, long long e,
                             long long d);

RingPoly poly_mul(const RingPoly& p, const RingPoly& q);

// Exact integral over [-1, 1]: odd powers vanish, x^(2j) contributes
// 2/(2j+1).
RingRat integrate_sym(const RingPoly& p);

std::string to_string(const RingPoly& p); // "(9) + (6*t)*x + (2)*x^2"

} // namespace kpell
