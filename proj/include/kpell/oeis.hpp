#pragma once

#include "kpell/seq.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kpell {

// Cross-reference between an OEIS entry and one of the families.
// The entry's value at b-file index i is compared against the family value
// at n = i + offset. Offsets are data, confirmed against the bundled
// excerpts, never guessed in code.
struct OeisMapping {
  std::string oeis_id; // "A002605"
  Family family = Family::KPell;
  long long k = 1;
  long long offset = 0;
};

// The eight bundled cross-references:
//   P_{2,n} A002605   P_{3,n} A015518   P_{4,n} A085449   P_{5,n} A002532
//   Q_{2,n} A080040   Q_{3,n} A102345   Q_{4,n} A087131   Q_{6,n} A127226
const std::vector<OeisMapping>& bundled_oeis_mappings();
std::optional<OeisMapping> find_bundled_mapping(std::string_view oeis_id);

struct BFileEntry {
  long long index = 0;
  Int value;
};

// b-file format: "index value" per line, whitespace separated; blank lines
// and lines starting with '#' are ignored. Throws std::runtime_error on
// malformed lines.
std::vector<BFileEntry> parse_b_file(std::istream& in);
std::vector<BFileEntry> load_b_file(const std::string& path);

struct OeisCheckResult {
  bool matched = false;
  long long terms_checked = 0;
  long long first_mismatch_index = -1; // b-file index, -1 when matched
  std::string detail;
};

// Compares the first n_check b-file terms against the mapped family values.
// A mismatch in the leading term is flagged as a possible offset shift
// rather than auto-corrected.
OeisCheckResult check_oeis(const OeisMapping& mapping,
                           const std::vector<BFileEntry>& entries,
                           long long n_check);

// Canonical b-file URL for an A-number, e.g. "/A002605/b002605.txt".
std::string b_file_url_path(std::string_view oeis_id);

} // namespace kpell
