// kpell: generation and verification front end for the k-Pell and
// k-Pell-Lucas sequences and their integral representations.
//
// Exit codes: 0 all checks pass (skips allowed), 1 verification failure,
// 2 usage error, 3 file or network error.

#include "kpell/bigint.hpp"
#include "kpell/oeis.hpp"
#include "kpell/report.hpp"
#include "kpell/ring.hpp"
#include "kpell/seq.hpp"
#include "kpell/sweep.hpp"

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace kpell;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

enum class OutFormat { Plain, Csv, Json };

OutFormat parse_format(const std::string& name) {
  if (name == "plain") return OutFormat::Plain;
  if (name == "csv") return OutFormat::Csv;
  if (name == "json") return OutFormat::Json;
  throw CLI::ValidationError("--format", "must be plain, csv, or json");
}

// "A..B" inclusive, or a single "A".
IndexRange parse_range(const std::string& text) {
  auto bad = [&] {
    return CLI::ValidationError("range", "'" + text +
                                             "' is not N or LO..HI");
  };
  auto parse_ll = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != s.size()) throw bad();
    return v;
  };
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    long long v = parse_ll(text);
    return {v, v};
  }
  IndexRange r{parse_ll(text.substr(0, dots)), parse_ll(text.substr(dots + 2))};
  if (r.empty()) throw bad();
  return r;
}

Family parse_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f)
    throw CLI::ValidationError("--family", "must be pell or pell-lucas");
  return *f;
}

std::vector<Check> parse_checks(const std::vector<std::string>& names) {
  std::vector<Check> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (Check c : all_checks()) out.push_back(c);
      continue;
    }
    auto c = check_from_name(name);
    if (!c)
      throw CLI::ValidationError(
          "--theorem", "unknown check '" + name +
                           "' (expected p-ln, q-ln, p-lnr, q-lnr, p-even, "
                           "p-odd, lemma21, lemma22, or all)");
    out.push_back(*c);
  }
  return out;
}

// ---------------------------------------------------------------- gen

int run_gen(Family family, long long k, long long from, long long to,
            OutFormat format) {
  if (from < 0 || to < 0)
    throw CLI::ValidationError("--from/--to", "range must be non-negative");
  std::vector<Int> values = sequence_range(family, k, from, to);
  switch (format) {
    case OutFormat::Plain:
      for (const auto& v : values) std::cout << v << "\n";
      break;
    case OutFormat::Csv:
      std::cout << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << from + static_cast<long long>(i) << "," << values[i]
                  << "\n";
      break;
    case OutFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < values.size(); ++i) {
        nlohmann::ordered_json item;
        item["n"] = from + static_cast<long long>(i);
        item["value"] = decimal(values[i]);
        arr.push_back(std::move(item));
      }
      std::cout << arr.dump() << "\n";
      break;
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------- table

int run_table(long long k_max, long long n_max, OutFormat format) {
  if (k_max < 1) throw CLI::ValidationError("--k-max", "must be >= 1");
  if (n_max < 0) throw CLI::ValidationError("--n-max", "must be >= 0");

  auto rows = [&](Family f) {
    std::vector<std::vector<Int>> table;
    for (long long k = 1; k <= k_max; ++k)
      table.push_back(sequence_range(f, k, 0, n_max));
    return table;
  };
  std::vector<std::vector<Int>> p_rows = rows(Family::KPell);
  std::vector<std::vector<Int>> q_rows = rows(Family::KPellLucas);

  switch (format) {
    case OutFormat::Plain:
      for (int block = 0; block < 2; ++block) {
        const auto& table = block == 0 ? p_rows : q_rows;
        const char* label = block == 0 ? "P" : "Q";
        for (long long k = 1; k <= k_max; ++k) {
          std::cout << label << " " << k << ":";
          for (const auto& v : table[k - 1]) std::cout << " " << v;
          std::cout << "\n";
        }
      }
      break;
    case OutFormat::Csv:
      for (int block = 0; block < 2; ++block) {
        const auto& table = block == 0 ? p_rows : q_rows;
        const char* label = block == 0 ? "P" : "Q";
        std::cout << "family,k";
        for (long long n = 0; n <= n_max; ++n) std::cout << "," << n;
        std::cout << "\n";
        for (long long k = 1; k <= k_max; ++k) {
          std::cout << label << "," << k;
          for (const auto& v : table[k - 1]) std::cout << "," << v;
          std::cout << "\n";
        }
      }
      break;
    case OutFormat::Json: {
      nlohmann::ordered_json doc;
      for (int block = 0; block < 2; ++block) {
        const auto& table = block == 0 ? p_rows : q_rows;
        nlohmann::ordered_json rows_json = nlohmann::ordered_json::array();
        for (long long k = 1; k <= k_max; ++k) {
          nlohmann::ordered_json row;
          row["k"] = k;
          nlohmann::ordered_json vals = nlohmann::ordered_json::array();
          for (const auto& v : table[k - 1]) vals.push_back(decimal(v));
          row["values"] = std::move(vals);
          rows_json.push_back(std::move(row));
        }
        doc[block == 0 ? "P" : "Q"] = std::move(rows_json);
      }
      std::cout << doc.dump() << "\n";
      break;
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------- binet

int run_binet(long long k, long long n, OutFormat format) {
  BinetPair pair = binet_pair(k, n);
  switch (format) {
    case OutFormat::Plain:
      std::cout << "P(" << k << "," << n << ") = " << pair.p << "\n";
      std::cout << "Q(" << k << "," << n << ") = " << pair.q << "\n";
      break;
    case OutFormat::Csv:
      std::cout << "k,n,p,q\n"
                << k << "," << n << "," << pair.p << "," << pair.q << "\n";
      break;
    case OutFormat::Json: {
      nlohmann::ordered_json j;
      j["k"] = k;
      j["n"] = n;
      j["p"] = decimal(pair.p);
      j["q"] = decimal(pair.q);
      std::cout << j.dump() << "\n";
      break;
    }
  }
  return kExitPass;
}

// ---------------------------------------------------------------- verify

int run_verify(const SweepRequest& req) {
  std::vector<VerificationReport> reports = run_sweep(req);
  for (const auto& r : reports) std::cout << to_json_line(r) << "\n";
  SweepSummary s = summarize(reports);
  std::cerr << "summary: " << s.passed << " pass, " << s.failed << " fail, "
            << s.skipped << " skipped (" << s.total() << " reports)\n";
  return s.failed > 0 ? kExitFail : kExitPass;
}

// ---------------------------------------------------------------- oeis

std::vector<BFileEntry> fetch_b_file(const std::string& oeis_id) {
  httplib::SSLClient client("oeis.org");
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  auto res = client.Get(b_file_url_path(oeis_id));
  if (!res)
    throw std::runtime_error("fetch failed: " + httplib::to_string(res.error()));
  if (res->status != 200)
    throw std::runtime_error("fetch failed: HTTP " +
                             std::to_string(res->status));
  std::istringstream body(res->body);
  return parse_b_file(body);
}

int run_oeis(const std::string& id, const std::string& file, bool fetch,
             long long n_check, const std::string& family_flag,
             long long k_flag, long long offset_flag, bool mapping_given) {
  OeisMapping mapping;
  if (mapping_given) {
    mapping = {id, parse_family(family_flag), k_flag, offset_flag};
  } else {
    auto bundled = find_bundled_mapping(id);
    if (!bundled)
      throw CLI::ValidationError(
          "--id", id + " is not a bundled mapping; pass --family/--k/--offset");
    mapping = *bundled;
  }
  if (mapping.k < 1) throw CLI::ValidationError("--k", "must be >= 1");
  if (n_check < 1) throw CLI::ValidationError("--n", "must be >= 1");

  std::vector<BFileEntry> entries =
      fetch ? fetch_b_file(id) : load_b_file(file);
  OeisCheckResult res = check_oeis(mapping, entries, n_check);

  VerificationReport report;
  report.id = "oeis";
  report.params = {{"k", mapping.k},
                   {"n", n_check},
                   {"offset", mapping.offset}};
  report.mode = Mode::Exact;
  report.status = res.matched ? Status::Pass : Status::Fail;
  report.detail = id + " vs " +
                  (mapping.family == Family::KPell ? "P" : "Q") + "_{" +
                  std::to_string(mapping.k) + ",n}: " + res.detail;
  std::cout << to_json_line(report) << "\n";
  std::cerr << report.detail << "\n";
  return res.matched ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact and numeric verification of k-Pell / k-Pell-Lucas sequences "
      "and their integral representations"};
  app.require_subcommand(1);

  std::string format_name = "plain";

  // gen
  auto* gen = app.add_subcommand("gen", "generate sequence values");
  std::string gen_family;
  long long gen_k = 0, gen_from = 0, gen_to = 0;
  gen->add_option("--family", gen_family, "pell or pell-lucas")->required();
  gen->add_option("--k", gen_k, "family parameter k (>= 1)")->required();
  gen->add_option("--from", gen_from, "first index n (default 0)");
  gen->add_option("--to", gen_to, "last index n")->required();
  gen->add_option("--format", format_name, "plain, csv, or json");

  // table
  auto* table = app.add_subcommand("table", "print P and Q value tables");
  long long table_kmax = 0, table_nmax = 0;
  table->add_option("--k-max", table_kmax, "largest k row")->required();
  table->add_option("--n-max", table_nmax, "largest index column")->required();
  table->add_option("--format", format_name, "plain, csv, or json");

  // binet
  auto* binet = app.add_subcommand(
      "binet", "evaluate P and Q at (k, n) through the closed form");
  long long binet_k = 0, binet_n = 0;
  binet->add_option("--k", binet_k, "family parameter k (>= 1)")->required();
  binet->add_option("--n", binet_n, "index n (>= 0)")->required();
  binet->add_option("--format", format_name, "plain, csv, or json");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "sweep identity and integral-representation checks; "
                "reports stream to stdout as JSON Lines");
  std::vector<std::string> verify_checks{"all"};
  std::string verify_k, verify_l = "0", verify_n, verify_r = "0", verify_m;
  std::string verify_mode = "exact";
  double verify_tol = 1e-12;
  int verify_jobs = 1;
  verify->add_option("--theorem", verify_checks,
                     "checks to run: p-ln q-ln p-lnr q-lnr p-even p-odd "
                     "lemma21 lemma22, or all");
  verify->add_option("--k", verify_k, "k range, N or LO..HI")->required();
  verify->add_option("--l", verify_l, "l range (default 0)");
  verify->add_option("--n", verify_n, "n range, N or LO..HI")->required();
  verify->add_option("--r", verify_r, "r range (default 0)");
  verify->add_option("--m", verify_m,
                     "m range for lemma22 (default: the n range)");
  verify->add_option("--mode", verify_mode, "exact, numeric, or both");
  verify->add_option("--tol", verify_tol,
                     "numeric relative tolerance (default 1e-12)");
  verify->add_option("--jobs", verify_jobs, "worker threads (default 1)");

  // oeis
  auto* oeis = app.add_subcommand(
      "oeis", "compare a generated sequence against an OEIS b-file");
  std::string oeis_id, oeis_file, oeis_family;
  long long oeis_n = 30, oeis_k = 0, oeis_offset = 0;
  bool oeis_fetch = false;
  oeis->add_option("--id", oeis_id, "OEIS id, e.g. A002605")->required();
  auto* file_opt = oeis->add_option("--file", oeis_file, "local b-file path");
  oeis->add_flag("--fetch", oeis_fetch,
                 "download the b-file from oeis.org instead of reading a "
                 "local file");
  oeis->add_option("--n", oeis_n, "number of leading terms to compare");
  auto* fam_opt =
      oeis->add_option("--family", oeis_family, "mapping override: family");
  auto* k_opt = oeis->add_option("--k", oeis_k, "mapping override: k");
  auto* off_opt =
      oeis->add_option("--offset", oeis_offset,
                       "mapping override: b-file index + offset = n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    OutFormat format = parse_format(format_name);
    if (*gen)
      return run_gen(parse_family(gen_family), gen_k, gen_from, gen_to,
                     format);
    if (*table) return run_table(table_kmax, table_nmax, format);
    if (*binet) return run_binet(binet_k, binet_n, format);
    if (*verify) {
      SweepRequest req;
      req.checks = parse_checks(verify_checks);
      req.k = parse_range(verify_k);
      req.ell = parse_range(verify_l);
      req.n = parse_range(verify_n);
      req.r = parse_range(verify_r);
      if (!verify_m.empty()) req.m = parse_range(verify_m);
      if (verify_mode == "exact") req.mode = SweepMode::Exact;
      else if (verify_mode == "numeric") req.mode = SweepMode::Numeric;
      else if (verify_mode == "both") req.mode = SweepMode::Both;
      else
        throw CLI::ValidationError("--mode", "must be exact, numeric, or both");
      req.tol = verify_tol;
      req.jobs = verify_jobs;
      return run_verify(req);
    }
    if (*oeis) {
      bool mapping_given = *fam_opt || *k_opt || *off_opt;
      if (mapping_given && !(*fam_opt && *k_opt && *off_opt))
        throw CLI::ValidationError(
            "--family/--k/--offset", "mapping overrides must be given together");
      if (oeis_fetch == !file_opt->empty())
        throw CLI::ValidationError("--file/--fetch",
                                   "exactly one source is required");
      return run_oeis(oeis_id, oeis_file, oeis_fetch, oeis_n, oeis_family,
                      oeis_k, oeis_offset, mapping_given);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
