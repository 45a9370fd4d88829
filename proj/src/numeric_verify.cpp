#include "kpell/numeric_verify.hpp"

#include "kpell/seq.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace kpell {

namespace {

double as_double(const Int& v) { return v.convert_to<double>(); }

// b^e by squaring, e >= 0; keeps the rounding path short and deterministic.
double dpow(double b, long long e) {
  double acc = 1.0, sq = b;
  for (long long rem = e; rem > 0; rem >>= 1) {
    if (rem & 1) acc *= sq;
    if (rem > 1) sq *= sq;
  }
  return acc;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

NumericIntegrand numeric_integrand(ReprId id, const ReprParams& p) {
  validate_params(id, p);
  double s = std::sqrt(1.0 + static_cast<double>(p.k));
  long long n = p.n;

  if (n == 0) {
    // Analytically simplified constant integrands (the same cancellations as
    // the exact closed forms; the general form would need exponent -1).
    NumericIntegrand out;
    out.degree = 0;
    out.prefactor = 1.0;
    double c = 0.0;
    switch (id) {
      case ReprId::PLn:
      case ReprId::PEven: c = 0.0; break;
      case ReprId::QLn: c = 1.0; break;
      case ReprId::PLnr: c = 0.5 * as_double(pell(p.k, p.r)); break;
      case ReprId::QLnr: c = 0.5 * as_double(pell_lucas(p.k, p.r)); break;
      case ReprId::POdd: c = 0.5; break;
    }
    out.f = [c](double) { return c; };
    return out;
  }

  double pl = 0.0, ql = 0.0, pr = 0.0, qr = 0.0;
  if (repr_uses_ell(id)) {
    pl = as_double(pell(p.k, p.ell));
    ql = as_double(pell_lucas(p.k, p.ell));
  }
  if (repr_uses_r(id)) {
    pr = as_double(pell(p.k, p.r));
    qr = as_double(pell_lucas(p.k, p.r));
  }
  // P_{k,0} = 0 wipes out every x coefficient, so the l = 0 integrands are
  // constants regardless of n; sizing the rule from n would be wrong there.
  bool constant_base = repr_uses_ell(id) && pl == 0.0;

  NumericIntegrand out;
  switch (id) {
    case ReprId::PLn:
      out.degree = constant_base ? 0 : n - 1;
      out.prefactor = n * pl * dpow(0.5, n);
      out.f = [ql, pl, s, n](double x) {
        return dpow(ql + 2.0 * s * pl * x, n - 1);
      };
      break;
    case ReprId::QLn:
      out.degree = constant_base ? 0 : n;
      out.prefactor = dpow(0.5, n);
      out.f = [ql, pl, s, n](double x) {
        return (ql + 2.0 * (n + 1) * s * pl * x) *
               dpow(ql + 2.0 * s * pl * x, n - 1);
      };
      break;
    case ReprId::PLnr:
      out.degree = constant_base ? 0 : n;
      out.prefactor = dpow(0.5, n + 1);
      out.f = [=](double x) {
        double lin = n * pl * qr + pr * ql + 2.0 * (n + 1) * s * pl * pr * x;
        return lin * dpow(ql + 2.0 * s * pl * x, n - 1);
      };
      break;
    case ReprId::QLnr:
      out.degree = constant_base ? 0 : n;
      out.prefactor = dpow(0.5, n + 1);
      out.f = [=, k = p.k](double x) {
        double lin = 4.0 * (1.0 + k) * n * pl * pr + ql * qr +
                     2.0 * (n + 1) * s * pl * qr * x;
        return lin * dpow(ql + 2.0 * s * pl * x, n - 1);
      };
      break;
    case ReprId::PEven:
      out.degree = n - 1;
      out.prefactor = static_cast<double>(n);
      out.f = [k = p.k, s, n](double x) {
        return dpow(k + 2.0 + 2.0 * s * x, n - 1);
      };
      break;
    case ReprId::POdd:
      out.degree = n;
      out.prefactor = 0.5;
      out.f = [k = p.k, s, n](double x) {
        return (2.0 * n + k + 2.0 + 2.0 * (n + 1) * s * x) *
               dpow(k + 2.0 + 2.0 * s * x, n - 1);
      };
      break;
  }
  return out;
}

int rule_size_for_degree(long long degree) {
  return static_cast<int>((degree + 2) / 2) + 2; // ceil((deg+1)/2) + 2
}

double rhs_numeric(ReprId id, const ReprParams& p) {
  NumericIntegrand ig = numeric_integrand(id, p);
  const QuadratureRule& rule = cached_legendre_rule(rule_size_for_degree(ig.degree));
  return ig.prefactor * quad_integrate(rule, ig.f);
}

VerificationReport verify_numeric(ReprId id, const ReprParams& p, double tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  Int lhs = lhs_value(id, p);

  VerificationReport r;
  r.id = repr_name(id);
  r.params["k"] = p.k;
  if (repr_uses_ell(id)) r.params["l"] = p.ell;
  r.params["n"] = p.n;
  if (repr_uses_r(id)) r.params["r"] = p.r;
  r.mode = Mode::Numeric;
  r.lhs = decimal(lhs);

  if (abs(lhs) > float_exact_cap()) {
    r.status = Status::SkippedOverflow;
    r.detail = "|lhs| exceeds 2^53; float comparison is not meaningful";
    return r;
  }

  NumericIntegrand ig = numeric_integrand(id, p);
  int m = rule_size_for_degree(ig.degree);
  double rhs = ig.prefactor * quad_integrate(cached_legendre_rule(m), ig.f);
  double lhs_d = as_double(lhs);
  double rel = std::abs(rhs - lhs_d) / std::max(1.0, std::abs(lhs_d));

  r.params["m"] = m;
  r.rhs = format_double(rhs);
  r.status = rel <= tol ? Status::Pass : Status::Fail;
  if (r.status == Status::Fail)
    r.detail = "relative error " + format_double(rel) + " exceeds tol " +
               format_double(tol);
  return r;
}

} // namespace kpell
