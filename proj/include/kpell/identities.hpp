#pragma once

#include "kpell/report.hpp"

namespace kpell {

// Checks, exactly and with sequence values taken from the recurrences (not
// from binet_pair, so a failure would localize a recurrence/algebra
// disagreement):
//   (i)   Q_{k,n} + 2t P_{k,n} = 2 phi^n        (as ring elements)
//   (ii)  Q_{k,n} - 2t P_{k,n} = 2 conj(phi)^n
//   (iii) Q_{k,n}^2 - 4(1+k) P_{k,n}^2 = 4(-k)^n (as integers)
// A false identity is reported, never thrown. detail lists each part.
VerificationReport check_lemma21(long long k, long long n);

// Checks, exactly over the integers:
//   (i)  2 P_{k,m+n} = P_{k,m} Q_{k,n} + P_{k,n} Q_{k,m}
//   (ii) 2 Q_{k,m+n} = Q_{k,m} Q_{k,n} + 4(1+k) P_{k,m} P_{k,n}
VerificationReport check_lemma22(long long k, long long m, long long n);

} // namespace kpell
