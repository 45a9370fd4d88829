#pragma once

#include "kpell/bigint.hpp"

#include <string>

namespace kpell {

// Element a + b*t of the formal quadratic ring Z[t]/(t^2 - d), d >= 2.
// t is never evaluated numerically, so the arithmetic stays exact and
// component-wise even when d is a perfect square (k = 3 gives d = 4).
// Elements with different d never interact; mixing them throws.
struct RingInt {
  Int a;
  Int b;
  long long d = 2;
  bool operator==(const RingInt&) const = default;
};

// Same ring over exact rationals; coefficients stay in lowest terms.
struct RingRat {
  Rat a;
  Rat b;
  long long d = 2;
  bool operator==(const RingRat&) const = default;
};

RingRat to_rat(const RingInt& x);

RingInt ring_add(const RingInt& x, const RingInt& y);
RingInt ring_sub(const RingInt& x, const RingInt& y);
// (a1 + b1 t)(a2 + b2 t) = (a1 a2 + d b1 b2) + (a1 b2 + a2 b1) t
RingInt ring_mul(const RingInt& x, const RingInt& y);
RingInt ring_pow(const RingInt& x, long long e); // binary exponentiation
RingInt ring_conj(const RingInt& x);             // a - b t
Int ring_norm(const RingInt& x);                 // a^2 - d b^2, multiplicative

RingRat ring_add(const RingRat& x, const RingRat& y);
RingRat ring_sub(const RingRat& x, const RingRat& y);
RingRat ring_mul(const RingRat& x, const RingRat& y);
RingRat ring_pow(const RingRat& x, long long e);
RingRat ring_conj(const RingRat& x);
Rat ring_norm(const RingRat& x);
RingRat ring_scale(const RingRat& x, const Rat& s);
RingRat ring_inv(const RingRat& x); // conj(x)/norm(x); throws when norm = 0
RingRat ring_div(const RingRat& x, const RingRat& y);

std::string to_string(const RingInt& x); // "10 + 6*t", "58/3", "-2*t", "0"
std::string to_string(const RingRat& x);

// phi = 1 + t with t^2 = 1 + k: the larger root of r^2 = 2r + k.
// Its conjugate 1 - t is the second root.
RingInt phi_root(long long k);

struct BinetPair {
  Int p; // P_{k,n}
  Int q; // Q_{k,n}
};

// phi^n = a + b t  =>  p = b, q = 2a.
// (phi^n - conj(phi)^n = 2bt and phi^n + conj(phi)^n = 2a, so this realizes
// both closed forms with no irrational arithmetic.)
BinetPair binet_pair(long long k, long long n);

} // namespace kpell
