#include "kpell/seq.hpp"

#include <stdexcept>
#include <utility>

namespace kpell {

namespace {

void require_params(long long k, long long n) {
  if (k < 1) throw std::invalid_argument("k must be >= 1 (k = 0 is excluded)");
  if (n < 0) throw std::invalid_argument("sequence index n must be >= 0");
}

// Rolling two-term evaluation; O(n) big-int operations, no recursion.
Int advance(long long k, long long n, Int v0, Int v1) {
  if (n == 0) return v0;
  for (long long i = 1; i < n; ++i) {
    Int next = 2 * v1 + k * v0;
    v0 = std::move(v1);
    v1 = std::move(next);
  }
  return v1;
}

} // namespace

const char* family_name(Family f) {
  return f == Family::KPell ? "pell" : "pell-lucas";
}

std::optional<Family> family_from_name(std::string_view name) {
  if (name == "pell" || name == "p") return Family::KPell;
  if (name == "pell-lucas" || name == "q") return Family::KPellLucas;
  return std::nullopt;
}

Int pell(long long k, long long n) {
  require_params(k, n);
  return advance(k, n, Int(0), Int(1));
}

Int pell_lucas(long long k, long long n) {
  require_params(k, n);
  return advance(k, n, Int(2), Int(2));
}

Int sequence_value(Family f, long long k, long long n) {
  return f == Family::KPell ? pell(k, n) : pell_lucas(k, n);
}

std::vector<Int> sequence_range(Family f, long long k, long long n_from,
                                long long n_to) {
  if (n_from > n_to) return {};
  require_params(k, n_from);
  Int v0 = f == Family::KPell ? 0 : 2;
  Int v1 = f == Family::KPell ? 1 : 2;
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n_to - n_from + 1));
  for (long long n = 0; n <= n_to; ++n) {
    if (n >= n_from) out.push_back(v0);
    Int next = 2 * v1 + k * v0;
    v0 = std::move(v1);
    v1 = std::move(next);
  }
  return out;
}

Int classical(Classical name, long long n) {
  if (n < 0) throw std::invalid_argument("sequence index n must be >= 0");
  switch (name) {
    case Classical::Pell:
      return pell(1, n);
    case Classical::PellLucas:
      return pell_lucas(1, n);
    case Classical::Fibonacci: {
      if (n == 0) return 0; // the 2^(n-1) scaling only applies for n >= 1
      Int q, rem;
      boost::multiprecision::divide_qr(pell(4, n), pow2(n - 1), q, rem);
      if (rem != 0)
        throw std::logic_error("P_{4,n} not divisible by 2^(n-1)");
      return q;
    }
    case Classical::Lucas: {
      Int q, rem;
      boost::multiprecision::divide_qr(pell_lucas(4, n), pow2(n), q, rem);
      if (rem != 0) throw std::logic_error("Q_{4,n} not divisible by 2^n");
      return q;
    }
  }
  throw std::invalid_argument("unknown classical sequence");
}

} // namespace kpell
