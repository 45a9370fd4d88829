#pragma once

#include "kpell/poly.hpp"
#include "kpell/report.hpp"

#include <optional>
#include <string_view>

namespace kpell {

// The six integral representations under verification. Writing D = 2*sqrt(1+k)
// (the ring element 2t) and taking P/Q values at the lower indices:
//
//   PLn   : P_{k,ln}    = n P_{k,l} / 2^n * I[ (Q_{k,l} + D P_{k,l} x)^(n-1) ]
//   QLn   : Q_{k,ln}    = 1 / 2^n * I[ (Q_{k,l} + (n+1) D P_{k,l} x) * base^(n-1) ]
//   PLnr  : P_{k,ln+r}  = 1 / 2^(n+1) * I[ (n P_l Q_r + P_r Q_l + (n+1) D P_l P_r x) * base^(n-1) ]
//   QLnr  : Q_{k,ln+r}  = 1 / 2^(n+1) * I[ (n D^2 P_l P_r + Q_l Q_r + (n+1) D P_l Q_r x) * base^(n-1) ]
//   PEven : P_{k,2n}    = n * I[ (k + 2 + D x)^(n-1) ]
//   POdd  : P_{k,2n+1}  = 1/2 * I[ (2n + k + 2 + (n+1) D x) * (k + 2 + D x)^(n-1) ]
//
// where I[.] is the integral over [-1, 1] and base is the parenthesized
// linear form raised to n-1.
enum class ReprId { PLn, QLn, PLnr, QLnr, PEven, POdd };

struct ReprParams {
  long long k = 1;   // k >= 1
  long long ell = 0; // unused by PEven/POdd
  long long n = 0;
  long long r = 0;   // used only by PLnr/QLnr
};

bool repr_uses_ell(ReprId id);
bool repr_uses_r(ReprId id);
const char* repr_name(ReprId id); // "p-ln", "q-ln", ..., "p-odd"
std::optional<ReprId> repr_from_name(std::string_view name);

// Throws std::invalid_argument on k < 1, negative indices, or parameters a
// representation does not take (nonzero ell for PEven/POdd, nonzero r where
// unused).
void validate_params(ReprId id, const ReprParams& p);

// The sequence value each representation must reproduce.
Int lhs_value(ReprId id, const ReprParams& p);

struct ExactEvaluation {
  RingRat rhs;        // exact value of the right-hand side
  Rat prefactor;      // factor in front of the integral
  RingPoly integrand; // expanded integrand; empty for n = 0 closed forms
  bool closed_form = false;
};

// Builds the integrand, expands it, integrates exactly, and applies the
// prefactor. n = 0 would need exponent -1; those cases return the
// analytically simplified value instead (see the closed-form notes in the
// implementation).
ExactEvaluation evaluate_exact(ReprId id, const ReprParams& p);
RingRat rhs_exact(ReprId id, const ReprParams& p);

// Independent route for PLn only, n >= 1 and ell >= 1: evaluate the
// antiderivative base^n / (2 n P_{k,l} t) at +-1 instead of expanding.
// Division by 2 n P_{k,l} t is exact in the rational ring since the divisor
// has nonzero norm.
RingRat rhs_p_ln_antiderivative(const ReprParams& p);

// Pass iff lhs embeds component-wise equal to rhs_exact (in particular the
// t-component of the right side must be exactly 0). A mismatch is reported
// with the fully expanded integrand in detail.
VerificationReport verify_exact(ReprId id, const ReprParams& p);

} // namespace kpell
