#include "kpell/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace kpell {

namespace {

struct Task {
  Check check;
  long long k = 1, ell = 0, n = 0, r = 0, m = 0;
  bool numeric = false;
};

VerificationReport evaluate(const Task& t, double tol) {
  if (t.check == Check::Lemma21) return check_lemma21(t.k, t.n);
  if (t.check == Check::Lemma22) return check_lemma22(t.k, t.m, t.n);
  ReprId id = check_repr(t.check);
  ReprParams p{t.k, t.ell, t.n, t.r};
  return t.numeric ? verify_numeric(id, p, tol) : verify_exact(id, p);
}

} // namespace

const char* check_name(Check c) {
  switch (c) {
    case Check::PLn: return "p-ln";
    case Check::QLn: return "q-ln";
    case Check::PLnr: return "p-lnr";
    case Check::QLnr: return "q-lnr";
    case Check::PEven: return "p-even";
    case Check::POdd: return "p-odd";
    case Check::Lemma21: return "lemma21";
    case Check::Lemma22: return "lemma22";
  }
  return "?";
}

std::optional<Check> check_from_name(std::string_view name) {
  for (Check c : all_checks())
    if (name == check_name(c)) return c;
  return std::nullopt;
}

std::vector<Check> all_checks() {
  return {Check::PLn,   Check::QLn,  Check::PLnr,    Check::QLnr,
          Check::PEven, Check::POdd, Check::Lemma21, Check::Lemma22};
}

bool check_is_lemma(Check c) {
  return c == Check::Lemma21 || c == Check::Lemma22;
}

ReprId check_repr(Check c) {
  switch (c) {
    case Check::PLn: return ReprId::PLn;
    case Check::QLn: return ReprId::QLn;
    case Check::PLnr: return ReprId::PLnr;
    case Check::QLnr: return ReprId::QLnr;
    case Check::PEven: return ReprId::PEven;
    case Check::POdd: return ReprId::POdd;
    default: throw std::invalid_argument("lemma checks have no ReprId");
  }
}

std::vector<VerificationReport> run_sweep(const SweepRequest& req) {
  if (req.k.empty() || req.n.empty())
    throw std::invalid_argument("k and n ranges must be non-empty");
  if (req.tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (req.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (req.k.lo < 1) throw std::invalid_argument("k range must start at >= 1");
  if (req.ell.lo < 0 || req.n.lo < 0 || req.r.lo < 0)
    throw std::invalid_argument("index ranges must be non-negative");

  IndexRange mrange = req.m.value_or(req.n);
  bool want_exact =
      req.mode == SweepMode::Exact || req.mode == SweepMode::Both;
  bool want_numeric =
      req.mode == SweepMode::Numeric || req.mode == SweepMode::Both;

  // Deterministic tuple order; parallel execution only shuffles who computes
  // which slot.
  std::vector<Task> tasks;
  for (Check c : req.checks) {
    for (long long k = req.k.lo; k <= req.k.hi; ++k) {
      if (c == Check::Lemma21) {
        for (long long n = req.n.lo; n <= req.n.hi; ++n)
          tasks.push_back({c, k, 0, n, 0, 0, false});
      } else if (c == Check::Lemma22) {
        for (long long m = mrange.lo; m <= mrange.hi; ++m)
          for (long long n = req.n.lo; n <= req.n.hi; ++n)
            tasks.push_back({c, k, 0, n, 0, m, false});
      } else {
        ReprId id = check_repr(c);
        IndexRange ells = repr_uses_ell(id) ? req.ell : IndexRange{0, 0};
        IndexRange rs = repr_uses_r(id) ? req.r : IndexRange{0, 0};
        if ((repr_uses_ell(id) && ells.empty()) ||
            (repr_uses_r(id) && rs.empty()))
          throw std::invalid_argument("required parameter range is empty");
        for (long long ell = ells.lo; ell <= ells.hi; ++ell)
          for (long long n = req.n.lo; n <= req.n.hi; ++n)
            for (long long r = rs.lo; r <= rs.hi; ++r) {
              if (want_exact) tasks.push_back({c, k, ell, n, r, 0, false});
              if (want_numeric) tasks.push_back({c, k, ell, n, r, 0, true});
            }
      }
    }
  }

  std::vector<VerificationReport> reports(tasks.size());
  if (req.jobs == 1 || tasks.size() < 2) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      reports[i] = evaluate(tasks[i], req.tol);
    return reports;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      reports[i] = evaluate(tasks[i], req.tol);
    }
  };
  std::vector<std::thread> pool;
  int threads = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(req.jobs), tasks.size()));
  pool.reserve(static_cast<std::size_t>(threads));
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return reports;
}

SweepSummary summarize(const std::vector<VerificationReport>& reports) {
  SweepSummary s;
  for (const auto& r : reports) {
    switch (r.status) {
      case Status::Pass: ++s.passed; break;
      case Status::Fail: ++s.failed; break;
      case Status::SkippedOverflow: ++s.skipped; break;
    }
  }
  return s;
}

} // namespace kpell
