#include "kpell/poly.hpp"

#include <stdexcept>
#include <utility>

namespace kpell {

namespace {

bool is_zero(const RingRat& c) { return c.a == 0 && c.b == 0; }

void require_same_d(long long dx, long long dy) {
  if (dx != dy)
    throw std::invalid_argument("polynomials have different discriminants");
}

} // namespace

RingPoly make_poly(std::vector<RingRat> coeffs, long long d) {
  for (const auto& c : coeffs) require_same_d(c.d, d);
  RingPoly p{std::move(coeffs), d};
  poly_normalize(p);
  return p;
}

void poly_normalize(RingPoly& p) {
  while (!p.coeffs.empty() && is_zero(p.coeffs.back())) p.coeffs.pop_back();
}

long long poly_degree(const RingPoly& p) {
  return static_cast<long long>(p.coeffs.size()) - 1;
}

bool poly_is_zero(const RingPoly& p) { return p.coeffs.empty(); }

RingPoly expand_linear_power(const RingRat& c0, const RingRat& c1, long long e,
                             long long d) {
  if (e < 0) throw std::invalid_argument("expand_linear_power: e must be >= 0");
  require_same_d(c0.d, d);
  require_same_d(c1.d, d);

  // (c0 + c1 x)^e = sum_i C(e,i) c0^(e-i) c1^i x^i
  std::vector<RingRat> pow0(static_cast<std::size_t>(e) + 1);
  std::vector<RingRat> pow1(static_cast<std::size_t>(e) + 1);
  pow0[0] = pow1[0] = RingRat{1, 0, d};
  for (long long i = 1; i <= e; ++i) {
    pow0[i] = ring_mul(pow0[i - 1], c0);
    pow1[i] = ring_mul(pow1[i - 1], c1);
  }

  std::vector<RingRat> coeffs(static_cast<std::size_t>(e) + 1);
  Int binom = 1; // C(e,i), advanced multiplicatively; the division is exact
  for (long long i = 0; i <= e; ++i) {
    coeffs[i] = ring_scale(ring_mul(pow0[e - i], pow1[i]), Rat(binom));
    if (i < e) binom = binom * (e - i) / (i + 1);
  }
  return make_poly(std::move(coeffs), d);
}

RingPoly poly_mul(const RingPoly& p, const RingPoly& q) {
  require_same_d(p.d, q.d);
  if (poly_is_zero(p) || poly_is_zero(q)) return RingPoly{{}, p.d};
  std::vector<RingRat> out(p.coeffs.size() + q.coeffs.size() - 1,
                           RingRat{0, 0, p.d});
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs.size(); ++j)
      out[i + j] = ring_add(out[i + j], ring_mul(p.coeffs[i], q.coeffs[j]));
  return make_poly(std::move(out), p.d);
}

RingRat integrate_sym(const RingPoly& p) {
  RingRat acc{0, 0, p.d};
  for (std::size_t j = 0; j < p.coeffs.size(); j += 2) {
    // int_{-1}^{1} x^j dx = 2/(j+1) for even j; odd moments vanish
    acc = ring_add(acc,
                   ring_scale(p.coeffs[j], Rat(2, static_cast<long long>(j) + 1)));
  }
  return acc;
}

std::string to_string(const RingPoly& p) {
  if (poly_is_zero(p)) return "0";
  std::string out;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    if (is_zero(p.coeffs[j])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p.coeffs[j]) + ")";
    if (j == 1) out += "*x";
    if (j > 1) out += "*x^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

} // namespace kpell
