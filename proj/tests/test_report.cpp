#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kpell/report.hpp"

#include <stdexcept>
#include <vector>

using namespace kpell;

TEST_CASE("enum names") {
  CHECK(to_string(Mode::Exact) == std::string("exact"));
  CHECK(to_string(Mode::Numeric) == std::string("numeric"));
  CHECK(to_string(Status::Pass) == std::string("pass"));
  CHECK(to_string(Status::Fail) == std::string("fail"));
  CHECK(to_string(Status::SkippedOverflow) == std::string("skipped-overflow"));
  CHECK(mode_from_string("numeric") == Mode::Numeric);
  CHECK(status_from_string("skipped-overflow") == Status::SkippedOverflow);
  CHECK(!mode_from_string("EXACT").has_value());
  CHECK(!status_from_string("skip").has_value());
}

TEST_CASE("serialization round-trips") {
  std::vector<VerificationReport> samples;

  VerificationReport a;
  a.id = "p-ln";
  a.params = {{"k", 1}, {"l", 2}, {"n", 3}};
  a.mode = Mode::Exact;
  a.lhs = "70";
  a.rhs = "70";
  a.status = Status::Pass;
  samples.push_back(a);

  VerificationReport b;
  b.id = "q-lnr";
  b.params = {{"k", 10}, {"l", 8}, {"n", 8}, {"r", 8}, {"m", 7}};
  b.mode = Mode::Numeric;
  b.lhs = "123456789012345678901234567890"; // deliberately beyond 2^63
  b.rhs = "";
  b.status = Status::SkippedOverflow;
  b.detail = "|lhs| exceeds 2^53; float comparison is not meaningful";
  samples.push_back(b);

  VerificationReport c;
  c.id = "lemma21";
  c.params = {{"k", 3}, {"n", 0}};
  c.mode = Mode::Exact;
  c.lhs = "-4";
  c.rhs = "-4";
  c.status = Status::Fail;
  c.detail = "quotes \" and backslash \\ and unicode \xE2\x88\xAB survive";
  samples.push_back(c);

  for (const auto& r : samples) {
    std::string line = to_json_line(r);
    CHECK(line.find('\n') == std::string::npos);
    VerificationReport back = report_from_json(line);
    CHECK(back == r);
    // serialize(parse(serialize(x))) is stable byte-for-byte
    CHECK(to_json_line(back) == line);
  }
}

TEST_CASE("serialized key order is fixed") {
  VerificationReport r;
  r.id = "p-even";
  r.params = {{"n", 2}, {"k", 2}};
  r.mode = Mode::Exact;
  r.lhs = "16";
  r.rhs = "16";
  r.status = Status::Pass;
  CHECK(to_json_line(r) ==
        R"({"id":"p-even","params":{"k":2,"n":2},"mode":"exact","lhs":"16",)"
        R"("rhs":"16","status":"pass","detail":""})");
}

TEST_CASE("malformed JSON is rejected") {
  CHECK_THROWS_AS(report_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(
      report_from_json(
          R"({"id":"x","params":{},"mode":"sideways","lhs":"","rhs":"","status":"pass","detail":""})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      report_from_json(
          R"({"id":"x","params":{"k":"two"},"mode":"exact","lhs":"","rhs":"","status":"pass","detail":""})"),
      std::invalid_argument);
}
