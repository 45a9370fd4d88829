#pragma once

#include "kpell/identities.hpp"
#include "kpell/integral_reps.hpp"
#include "kpell/numeric_verify.hpp"
#include "kpell/report.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace kpell {

// Everything cmd_verify can sweep: the six integral representations plus the
// two preparatory identity checks.
enum class Check {
  PLn,
  QLn,
  PLnr,
  QLnr,
  PEven,
  POdd,
  Lemma21,
  Lemma22,
};

const char* check_name(Check c);
std::optional<Check> check_from_name(std::string_view name);
std::vector<Check> all_checks();
bool check_is_lemma(Check c);
ReprId check_repr(Check c); // valid for non-lemma checks only

// Inclusive index range.
struct IndexRange {
  long long lo = 0;
  long long hi = 0;
  bool contains(long long v) const { return lo <= v && v <= hi; }
  bool empty() const { return lo > hi; }
  long long size() const { return empty() ? 0 : hi - lo + 1; }
};

enum class SweepMode { Exact, Numeric, Both };

struct SweepRequest {
  std::vector<Check> checks;
  IndexRange k{1, 1};
  IndexRange ell{0, 0};
  IndexRange n{0, 0};
  IndexRange r{0, 0};
  std::optional<IndexRange> m; // lemma22 second index; defaults to n's range
  SweepMode mode = SweepMode::Exact;
  double tol = 1e-12;
  int jobs = 1;
};

struct SweepSummary {
  long long passed = 0;
  long long failed = 0;
  long long skipped = 0;
  long long total() const { return passed + failed + skipped; }
};

// Runs the cartesian sweep. Report order is deterministic (checks in the
// given order, then k, ell/m, n, r ascending; exact before numeric per
// tuple) regardless of jobs. Lemma checks are exact-only and produce one
// report per tuple in every mode.
std::vector<VerificationReport> run_sweep(const SweepRequest& req);

SweepSummary summarize(const std::vector<VerificationReport>& reports);

} // namespace kpell
