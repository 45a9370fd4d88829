#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kpell/report.hpp"

#include "subprocess.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace kpell;
using testutil::run_command;

namespace {

std::string bin() { return testutil::require_env("KPELL_BIN"); }
std::string data() { return testutil::require_env("KPELL_DATA"); }

testutil::CommandResult cli(const std::string& args) {
  return run_command(bin() + " " + args + " 2>/dev/null");
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

TEST_CASE("gen: plain output, one value per line") {
  auto res = cli("gen --family pell --k 5 --from 0 --to 6");
  CHECK(res.exit_code == 0);
  CHECK(lines_of(res.output) ==
        std::vector<std::string>{"0", "1", "2", "9", "28", "101", "342"});

  auto single = cli("gen --family pell-lucas --k 1 --from 10 --to 10");
  CHECK(single.exit_code == 0);
  CHECK(single.output == "6726\n");
}

TEST_CASE("gen: csv and json") {
  auto csv = cli("gen --family pell --k 2 --from 0 --to 3 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output == "n,value\n0,0\n1,1\n2,2\n3,6\n");

  auto json_res = cli("gen --family pell --k 2 --from 2 --to 3 --format json");
  CHECK(json_res.exit_code == 0);
  auto doc = nlohmann::json::parse(json_res.output);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["n"] == 2);
  CHECK(doc[0]["value"] == "2");
  CHECK(doc[1]["value"] == "6");
}

TEST_CASE("gen: flag errors exit 2") {
  CHECK(cli("gen --family pell --k 0 --from 0 --to 4").exit_code == 2);
  CHECK(cli("gen --family pell --k 3 --from -2 --to 4").exit_code == 2);
  CHECK(cli("gen --family martian --k 3 --from 0 --to 4").exit_code == 2);
  CHECK(cli("gen --family pell --k 3 --to 4 --format yaml").exit_code == 2);
  // empty range is not an error
  auto empty = cli("gen --family pell --k 3 --from 5 --to 4");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.empty());
}

TEST_CASE("table: plain matches the bundled golden tables byte-for-byte") {
  auto res = cli("table --k-max 6 --n-max 10");
  CHECK(res.exit_code == 0);
  CHECK(res.output == slurp(data() + "/golden_tables_k6_n10.txt"));
}

TEST_CASE("table: smallest table") {
  auto res = cli("table --k-max 1 --n-max 0");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "P 1: 0\nQ 1: 2\n");
}

TEST_CASE("table: csv blocks with header rows") {
  auto res = cli("table --k-max 2 --n-max 3 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(lines_of(res.output) ==
        std::vector<std::string>{
            "family,k,0,1,2,3", "P,1,0,1,2,5", "P,2,0,1,2,6",
            "family,k,0,1,2,3", "Q,1,2,2,6,14", "Q,2,2,2,8,20"});
}

TEST_CASE("table: flag errors exit 2") {
  CHECK(cli("table --k-max 0 --n-max 3").exit_code == 2);
  CHECK(cli("table --k-max 2 --n-max -1").exit_code == 2);
}

TEST_CASE("binet") {
  auto plain = cli("binet --k 3 --n 5");
  CHECK(plain.exit_code == 0);
  CHECK(plain.output == "P(3,5) = 61\nQ(3,5) = 242\n");

  auto json_res = cli("binet --k 1 --n 3 --format json");
  auto doc = nlohmann::json::parse(json_res.output);
  CHECK(doc["p"] == "5");
  CHECK(doc["q"] == "14");

  CHECK(cli("binet --k 0 --n 3").exit_code == 2);
}

TEST_CASE("verify: exact sweep emits one pass report per tuple") {
  auto res = cli("verify --theorem p-ln --k 1..3 --l 1..4 --n 1..4");
  CHECK(res.exit_code == 0);
  auto report_lines = lines_of(res.output);
  REQUIRE(report_lines.size() == 48);
  for (const auto& line : report_lines) {
    VerificationReport r = report_from_json(line);
    CHECK(r.id == "p-ln");
    CHECK(r.mode == Mode::Exact);
    CHECK(r.status == Status::Pass);
    CHECK(to_json_line(r) == line);
  }
}

TEST_CASE("verify: specific tuple has the documented lhs") {
  auto res =
      cli("verify --theorem q-lnr --k 2..2 --l 1 --n 1 --r 1 --mode exact");
  CHECK(res.exit_code == 0);
  auto report_lines = lines_of(res.output);
  REQUIRE(report_lines.size() == 1);
  VerificationReport r = report_from_json(report_lines[0]);
  CHECK(r.lhs == "8");
  CHECK(r.rhs == "8");
  CHECK(r.status == Status::Pass);
}

TEST_CASE("verify: all checks, both modes, edge tuples included") {
  auto res = cli("verify --theorem all --k 1..1 --l 0..2 --n 0..2 --r 0..2 "
                 "--mode both");
  CHECK(res.exit_code == 0);
  bool saw_numeric = false, saw_lemma = false, saw_n0 = false;
  for (const auto& line : lines_of(res.output)) {
    VerificationReport r = report_from_json(line);
    CHECK(r.status == Status::Pass);
    // exact-mode reports never carry the overflow-skip status
    if (r.mode == Mode::Exact) CHECK(r.status != Status::SkippedOverflow);
    if (r.mode == Mode::Numeric) saw_numeric = true;
    if (r.id == "lemma21" || r.id == "lemma22") saw_lemma = true;
    if (r.params.count("n") && r.params.at("n") == 0) saw_n0 = true;
  }
  CHECK(saw_numeric);
  CHECK(saw_lemma);
  CHECK(saw_n0);
}

TEST_CASE("verify: report order is deterministic under --jobs") {
  std::string sweep =
      "verify --theorem all --k 1..2 --l 0..3 --n 0..3 --r 0..2 --mode both";
  auto serial = cli(sweep + " --jobs 1");
  auto parallel = cli(sweep + " --jobs 8");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.output == parallel.output);
}

TEST_CASE("verify: an unattainable numeric tolerance fails with exit 1") {
  auto res = cli("verify --theorem p-ln --k 1..3 --l 1..3 --n 2..4 "
                 "--mode numeric --tol 1e-30");
  CHECK(res.exit_code == 1);
  bool saw_fail = false;
  for (const auto& line : lines_of(res.output))
    if (report_from_json(line).status == Status::Fail) saw_fail = true;
  CHECK(saw_fail);
}

TEST_CASE("verify: flag errors exit 2") {
  CHECK(cli("verify --theorem p-ln --k 3..1 --n 1..2").exit_code == 2);
  CHECK(cli("verify --theorem p-ln --k x..y --n 1..2").exit_code == 2);
  CHECK(cli("verify --theorem p-ln --k 1..2 --n 1 --mode sideways").exit_code ==
        2);
  CHECK(cli("verify --theorem warp-drive --k 1..2 --n 1").exit_code == 2);
  CHECK(cli("verify --theorem p-ln --k 1..2 --n 1 --tol -1").exit_code == 2);
  CHECK(cli("verify --theorem p-ln --k 1..2 --n 1 --jobs 0").exit_code == 2);
  CHECK(cli("verify --theorem p-ln --k 0..2 --n 1").exit_code == 2);
}

TEST_CASE("oeis: bundled ids match their excerpts") {
  auto res = cli("oeis --id A002605 --file " + data() + "/oeis/b002605.txt" +
                 " --n 30");
  CHECK(res.exit_code == 0);
  auto report_lines = lines_of(res.output);
  REQUIRE(report_lines.size() == 1);
  VerificationReport r = report_from_json(report_lines[0]);
  CHECK(r.status == Status::Pass);
  CHECK(r.params.at("k") == 2);
  CHECK(r.params.at("offset") == 0);

  auto q4 = cli("oeis --id A087131 --file " + data() + "/oeis/b087131.txt" +
                " --n 20");
  CHECK(q4.exit_code == 0);
}

TEST_CASE("oeis: explicit mapping flags override the bundled table") {
  // The A002605 excerpt is P_{2,n}; an explicit identical mapping under an
  // unknown id must also match.
  auto res = cli("oeis --id A999999 --family pell --k 2 --offset 0 --file " +
                 data() + "/oeis/b002605.txt --n 30");
  CHECK(res.exit_code == 0);
  // A wrong k must mismatch with exit 1.
  auto bad = cli("oeis --id A999999 --family pell --k 3 --offset 0 --file " +
                 data() + "/oeis/b002605.txt --n 30");
  CHECK(bad.exit_code == 1);
  VerificationReport r = report_from_json(lines_of(bad.output).at(0));
  CHECK(r.status == Status::Fail);
}

TEST_CASE("oeis: error exit codes") {
  // unknown id without mapping flags
  CHECK(cli("oeis --id A000045 --file " + data() + "/oeis/b002605.txt")
            .exit_code == 2);
  // incomplete mapping flags
  CHECK(cli("oeis --id A000045 --family pell --file " + data() +
            "/oeis/b002605.txt")
            .exit_code == 2);
  // missing file is an I/O error, not a math error
  CHECK(cli("oeis --id A002605 --file /nonexistent/b.txt").exit_code == 3);
  // exactly one source
  CHECK(cli("oeis --id A002605 --file " + data() +
            "/oeis/b002605.txt --fetch")
            .exit_code == 2);
  CHECK(cli("oeis --id A002605").exit_code == 2);
}

TEST_CASE("usage errors") {
  CHECK(cli("").exit_code == 2);
  CHECK(cli("frobnicate").exit_code == 2);
  CHECK(cli("gen --family pell").exit_code == 2); // missing required flags
  auto help = run_command(bin() + " --help 2>/dev/null");
  CHECK(help.exit_code == 0);
}
