#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace kpell {

// Arbitrary-precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the canonical
// form the ring layer relies on for component-wise equality.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// 2^e, e >= 0.
Int pow2(long long e);

// (-k)^e as an exact integer.
Int neg_k_pow(long long k, long long e);

std::string decimal(const Int& v);

// "a/b" in lowest terms, or plain "a" when the denominator is 1.
std::string decimal(const Rat& v);

} // namespace kpell
