#pragma once

#include "kpell/bigint.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace kpell {

enum class Family { KPell, KPellLucas };

const char* family_name(Family f); // "pell" / "pell-lucas"
std::optional<Family> family_from_name(std::string_view name);

// P_{k,n} = 2 P_{k,n-1} + k P_{k,n-2},  P_{k,0} = 0, P_{k,1} = 1.
// Requires k >= 1 and n >= 0; exact for any n.
Int pell(long long k, long long n);

// Q_{k,n} = 2 Q_{k,n-1} + k Q_{k,n-2},  Q_{k,0} = 2, Q_{k,1} = 2.
Int pell_lucas(long long k, long long n);

Int sequence_value(Family f, long long k, long long n);

// [P or Q]_{k,n} for n in [n_from, n_to], computed in one linear pass.
// n_from > n_to yields an empty vector.
std::vector<Int> sequence_range(Family f, long long k, long long n_from,
                                long long n_to);

enum class Classical { Fibonacci, Lucas, Pell, PellLucas };

// The classical sequences recovered from the k-parameterized ones:
//   F_n = P_{4,n} / 2^(n-1)  (n >= 1; F_0 = 0 directly),
//   L_n = Q_{4,n} / 2^n,
//   Pell_n = P_{1,n},  PellLucas_n = Q_{1,n}.
// The divisions are asserted exact; a remainder is an internal error.
Int classical(Classical name, long long n);

} // namespace kpell
