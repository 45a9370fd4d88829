#include "kpell/report.hpp"

#include <json.hpp>

#include <stdexcept>

namespace kpell {

const char* to_string(Mode m) {
  return m == Mode::Exact ? "exact" : "numeric";
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::SkippedOverflow: return "skipped-overflow";
  }
  return "fail";
}

std::optional<Mode> mode_from_string(std::string_view s) {
  if (s == "exact") return Mode::Exact;
  if (s == "numeric") return Mode::Numeric;
  return std::nullopt;
}

std::optional<Status> status_from_string(std::string_view s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "skipped-overflow") return Status::SkippedOverflow;
  return std::nullopt;
}

std::string to_json_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  j["params"] = std::move(params);
  j["mode"] = to_string(r.mode);
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["status"] = to_string(r.status);
  j["detail"] = r.detail;
  return j.dump();
}

VerificationReport report_from_json(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
  }
  VerificationReport r;
  try {
    r.id = j.at("id").get<std::string>();
    for (const auto& [key, value] : j.at("params").items())
      r.params[key] = value.get<long long>();
    auto mode = mode_from_string(j.at("mode").get<std::string>());
    auto status = status_from_string(j.at("status").get<std::string>());
    if (!mode || !status)
      throw std::invalid_argument("bad report JSON: unknown mode or status");
    r.mode = *mode;
    r.status = *status;
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.detail = j.at("detail").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad report JSON: ") + e.what());
  }
  return r;
}

} // namespace kpell
