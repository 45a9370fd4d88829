#include "kpell/oeis.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace kpell {

const std::vector<OeisMapping>& bundled_oeis_mappings() {
  static const std::vector<OeisMapping> mappings = {
      {"A002605", Family::KPell, 2, 0},
      {"A015518", Family::KPell, 3, 0},
      {"A085449", Family::KPell, 4, 0},
      {"A002532", Family::KPell, 5, 0},
      {"A080040", Family::KPellLucas, 2, 0},
      {"A102345", Family::KPellLucas, 3, 0},
      {"A087131", Family::KPellLucas, 4, 0},
      {"A127226", Family::KPellLucas, 6, 0},
  };
  return mappings;
}

std::optional<OeisMapping> find_bundled_mapping(std::string_view oeis_id) {
  for (const auto& m : bundled_oeis_mappings())
    if (m.oeis_id == oeis_id) return m;
  return std::nullopt;
}

std::vector<BFileEntry> parse_b_file(std::istream& in) {
  std::vector<BFileEntry> out;
  std::string line;
  long long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream fields(line.substr(pos));
    long long index = 0;
    std::string value_text;
    if (!(fields >> index >> value_text))
      throw std::runtime_error("b-file line " + std::to_string(line_no) +
                               ": expected \"index value\"");
    try {
      out.push_back({index, Int(value_text)});
    } catch (const std::exception&) {
      throw std::runtime_error("b-file line " + std::to_string(line_no) +
                               ": bad integer \"" + value_text + "\"");
    }
  }
  return out;
}

std::vector<BFileEntry> load_b_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open b-file: " + path);
  return parse_b_file(in);
}

OeisCheckResult check_oeis(const OeisMapping& mapping,
                           const std::vector<BFileEntry>& entries,
                           long long n_check) {
  OeisCheckResult res;
  long long to_check =
      std::min<long long>(n_check, static_cast<long long>(entries.size()));
  if (to_check < n_check) {
    res.matched = false;
    res.first_mismatch_index = -1;
    res.detail = "b-file has only " + std::to_string(entries.size()) +
                 " terms, " + std::to_string(n_check) + " requested";
    return res;
  }
  for (long long i = 0; i < to_check; ++i) {
    const BFileEntry& e = entries[static_cast<std::size_t>(i)];
    long long n = e.index + mapping.offset;
    bool ok = false;
    std::string expected;
    if (n < 0) {
      expected = "(no value: mapped index " + std::to_string(n) + " < 0)";
    } else {
      Int ours = sequence_value(mapping.family, mapping.k, n);
      ok = ours == e.value;
      expected = decimal(ours);
    }
    if (!ok) {
      res.matched = false;
      res.terms_checked = i;
      res.first_mismatch_index = e.index;
      res.detail = "mismatch at b-file index " + std::to_string(e.index) +
                   ": file has " + decimal(e.value) + ", sequence gives " +
                   expected;
      if (i == 0) res.detail += " (possible offset shift)";
      return res;
    }
  }
  res.matched = true;
  res.terms_checked = to_check;
  res.first_mismatch_index = -1;
  res.detail = std::to_string(to_check) + " terms match";
  return res;
}

std::string b_file_url_path(std::string_view oeis_id) {
  if (oeis_id.size() < 2 || oeis_id[0] != 'A')
    throw std::invalid_argument("OEIS id must look like A002605");
  std::string digits(oeis_id.substr(1));
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("OEIS id must look like A002605");
  return "/" + std::string(oeis_id) + "/b" + digits + ".txt";
}

} // namespace kpell
