#include "kpell/ring.hpp"

#include <stdexcept>

namespace kpell {

namespace {

void require_same_d(long long dx, long long dy) {
  if (dx != dy)
    throw std::invalid_argument("ring elements have different discriminants");
}

// Shared textual form for both coefficient types.
template <class C>
std::string render(const C& a, const C& b) {
  auto coeff = [](const C& v) { return decimal(v); };
  if (b == 0) return coeff(a);
  std::string out;
  bool b_negative = b < 0;
  C b_abs = b_negative ? C(-b) : b;
  std::string tpart = (b_abs == 1 ? std::string("t") : coeff(b_abs) + "*t");
  if (a == 0) return (b_negative ? "-" : "") + tpart;
  out = coeff(a);
  out += b_negative ? " - " : " + ";
  out += tpart;
  return out;
}

template <class E>
E generic_pow(const E& x, long long e) {
  if (e < 0) throw std::invalid_argument("ring_pow: negative exponent");
  E acc{1, 0, x.d};
  E sq = x;
  long long rem = e;
  while (rem > 0) {
    if (rem & 1) acc = ring_mul(acc, sq);
    rem >>= 1;
    if (rem > 0) sq = ring_mul(sq, sq);
  }
  return acc;
}

} // namespace

RingRat to_rat(const RingInt& x) { return {Rat(x.a), Rat(x.b), x.d}; }

RingInt ring_add(const RingInt& x, const RingInt& y) {
  require_same_d(x.d, y.d);
  return {x.a + y.a, x.b + y.b, x.d};
}

RingInt ring_sub(const RingInt& x, const RingInt& y) {
  require_same_d(x.d, y.d);
  return {x.a - y.a, x.b - y.b, x.d};
}

RingInt ring_mul(const RingInt& x, const RingInt& y) {
  require_same_d(x.d, y.d);
  return {x.a * y.a + x.d * x.b * y.b, x.a * y.b + y.a * x.b, x.d};
}

RingInt ring_pow(const RingInt& x, long long e) { return generic_pow(x, e); }

RingInt ring_conj(const RingInt& x) { return {x.a, -x.b, x.d}; }

Int ring_norm(const RingInt& x) { return x.a * x.a - x.d * x.b * x.b; }

RingRat ring_add(const RingRat& x, const RingRat& y) {
  require_same_d(x.d, y.d);
  return {x.a + y.a, x.b + y.b, x.d};
}

RingRat ring_sub(const RingRat& x, const RingRat& y) {
  require_same_d(x.d, y.d);
  return {x.a - y.a, x.b - y.b, x.d};
}

RingRat ring_mul(const RingRat& x, const RingRat& y) {
  require_same_d(x.d, y.d);
  return {x.a * y.a + x.d * x.b * y.b, x.a * y.b + y.a * x.b, x.d};
}

RingRat ring_pow(const RingRat& x, long long e) { return generic_pow(x, e); }

RingRat ring_conj(const RingRat& x) { return {x.a, -x.b, x.d}; }

Rat ring_norm(const RingRat& x) { return x.a * x.a - x.d * x.b * x.b; }

RingRat ring_scale(const RingRat& x, const Rat& s) {
  return {x.a * s, x.b * s, x.d};
}

RingRat ring_inv(const RingRat& x) {
  Rat n = ring_norm(x);
  if (n == 0) throw std::invalid_argument("ring_inv: element has norm 0");
  return {x.a / n, -x.b / n, x.d};
}

RingRat ring_div(const RingRat& x, const RingRat& y) {
  require_same_d(x.d, y.d);
  return ring_mul(x, ring_inv(y));
}

std::string to_string(const RingInt& x) { return render(x.a, x.b); }

std::string to_string(const RingRat& x) { return render(x.a, x.b); }

RingInt phi_root(long long k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1 (k = 0 is excluded)");
  return {1, 1, 1 + k};
}

BinetPair binet_pair(long long k, long long n) {
  if (n < 0) throw std::invalid_argument("sequence index n must be >= 0");
  RingInt pw = ring_pow(phi_root(k), n);
  return {pw.b, 2 * pw.a};
}

} // namespace kpell
