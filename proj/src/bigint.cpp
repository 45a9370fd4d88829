#include "kpell/bigint.hpp"

#include <stdexcept>

namespace kpell {

Int pow2(long long e) {
  if (e < 0) throw std::invalid_argument("pow2: negative exponent");
  return Int(1) << static_cast<unsigned long long>(e);
}

Int neg_k_pow(long long k, long long e) {
  if (e < 0) throw std::invalid_argument("neg_k_pow: negative exponent");
  Int base = -Int(k);
  Int acc = 1;
  Int sq = base;
  long long rem = e;
  while (rem > 0) {
    if (rem & 1) acc *= sq;
    rem >>= 1;
    if (rem > 0) sq *= sq;
  }
  return acc;
}

std::string decimal(const Int& v) { return v.str(); }

std::string decimal(const Rat& v) {
  Int num = numerator(v);
  Int den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

} // namespace kpell
