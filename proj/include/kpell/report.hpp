#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace kpell {

enum class Mode { Exact, Numeric };
enum class Status { Pass, Fail, SkippedOverflow };

const char* to_string(Mode m);     // "exact" / "numeric"
const char* to_string(Status s);   // "pass" / "fail" / "skipped-overflow"
std::optional<Mode> mode_from_string(std::string_view s);
std::optional<Status> status_from_string(std::string_view s);

// One verification outcome. Big values are carried as decimal strings so the
// JSON form never overflows a fixed-width numeric consumer.
// Exact-mode reports never carry SkippedOverflow.
struct VerificationReport {
  std::string id;                          // "p-ln", "lemma21", "oeis", ...
  std::map<std::string, long long> params; // k, l, n, r, m as applicable
  Mode mode = Mode::Exact;
  std::string lhs;
  std::string rhs;
  Status status = Status::Fail;
  std::string detail;

  bool operator==(const VerificationReport&) const = default;
};

// One compact JSON object, no trailing newline. Keys are emitted in a fixed
// order so identical reports serialize identically.
std::string to_json_line(const VerificationReport& r);

// Inverse of to_json_line; throws std::invalid_argument on malformed input.
VerificationReport report_from_json(const std::string& line);

} // namespace kpell
