#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kpell/oeis.hpp"

#include "subprocess.hpp"

#include <sstream>
#include <stdexcept>

using namespace kpell;

TEST_CASE("b-file parsing") {
  std::istringstream in(
      "# comment line\n"
      "\n"
      "0 0\n"
      "1 1\n"
      "  2 2\n"
      "3 123456789012345678901234567890\n");
  auto entries = parse_b_file(in);
  REQUIRE(entries.size() == 4);
  CHECK(entries[0].index == 0);
  CHECK(entries[3].index == 3);
  CHECK(entries[3].value == Int("123456789012345678901234567890"));
}

TEST_CASE("malformed b-files are rejected") {
  std::istringstream no_value("0\n");
  CHECK_THROWS_AS(parse_b_file(no_value), std::runtime_error);
  std::istringstream bad_int("0 twelve\n");
  CHECK_THROWS_AS(parse_b_file(bad_int), std::runtime_error);
  CHECK_THROWS_AS(load_b_file("/nonexistent/b000000.txt"),
                  std::runtime_error);
}

TEST_CASE("bundled mappings") {
  CHECK(bundled_oeis_mappings().size() == 8);
  auto m = find_bundled_mapping("A002605");
  REQUIRE(m.has_value());
  CHECK(m->family == Family::KPell);
  CHECK(m->k == 2);
  CHECK(m->offset == 0);
  auto q6 = find_bundled_mapping("A127226");
  REQUIRE(q6.has_value());
  CHECK(q6->family == Family::KPellLucas);
  CHECK(q6->k == 6);
  CHECK(!find_bundled_mapping("A000045").has_value());
}

TEST_CASE("all eight bundled excerpts match") {
  std::string data = testutil::require_env("KPELL_DATA");
  for (const auto& mapping : bundled_oeis_mappings()) {
    std::string path =
        data + "/oeis/b" + mapping.oeis_id.substr(1) + ".txt";
    auto entries = load_b_file(path);
    OeisCheckResult res = check_oeis(mapping, entries, 30);
    INFO(mapping.oeis_id << ": " << res.detail);
    CHECK(res.matched);
    CHECK(res.terms_checked == 30);
  }
}

TEST_CASE("mismatches report the first bad index") {
  auto mapping = *find_bundled_mapping("A002605");
  std::vector<BFileEntry> entries;
  for (long long n = 0; n < 12; ++n)
    entries.push_back({n, sequence_value(Family::KPell, 2, n)});

  entries[7].value += 1;
  OeisCheckResult res = check_oeis(mapping, entries, 12);
  CHECK(!res.matched);
  CHECK(res.first_mismatch_index == 7);
  CHECK(res.detail.find("possible offset shift") == std::string::npos);

  entries[7].value -= 1;
  entries[0].value = 99;
  res = check_oeis(mapping, entries, 12);
  CHECK(!res.matched);
  CHECK(res.first_mismatch_index == 0);
  CHECK(res.detail.find("possible offset shift") != std::string::npos);
}

TEST_CASE("offset shifts the compared index") {
  // File listing P_{2,n+3} at index n matches under offset 3.
  OeisMapping mapping{"A999999", Family::KPell, 2, 3};
  std::vector<BFileEntry> entries;
  for (long long i = 0; i < 10; ++i)
    entries.push_back({i, sequence_value(Family::KPell, 2, i + 3)});
  CHECK(check_oeis(mapping, entries, 10).matched);
  // ... and fails under offset 0.
  mapping.offset = 0;
  OeisCheckResult res = check_oeis(mapping, entries, 10);
  CHECK(!res.matched);
  CHECK(res.first_mismatch_index == 0);
}

TEST_CASE("short files are reported, not silently truncated") {
  auto mapping = *find_bundled_mapping("A080040");
  std::vector<BFileEntry> entries{{0, Int(2)}, {1, Int(2)}};
  OeisCheckResult res = check_oeis(mapping, entries, 30);
  CHECK(!res.matched);
  CHECK(res.detail.find("only") != std::string::npos);
}

TEST_CASE("b-file URL paths") {
  CHECK(b_file_url_path("A002605") == "/A002605/b002605.txt");
  CHECK_THROWS_AS(b_file_url_path("002605"), std::invalid_argument);
  CHECK_THROWS_AS(b_file_url_path("Axyz"), std::invalid_argument);
}
