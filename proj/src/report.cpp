#include "cosan/report.hpp"

namespace cosan {

namespace {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Error: return "error";
  }
  return "error";
}

}  // namespace

CheckReport combine(std::string name, std::vector<CheckReport> parts) {
  CheckReport out{std::move(name), Verdict::Pass, nullptr, {}};
  for (const auto& p : parts) {
    if (p.result == Verdict::Error) {
      out.result = Verdict::Error;
    } else if (p.result == Verdict::Fail && out.result == Verdict::Pass) {
      out.result = Verdict::Fail;
    }
  }
  for (const auto& p : parts) {
    if (p.result == out.result && !out.passed()) {
      out.witness = {{"first_failing", p.check}};
      break;
    }
  }
  out.parts = std::move(parts);
  return out;
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json j = {
      {"check", report.check},
      {"result", verdict_name(report.result)},
      {"witness", report.witness},
  };
  if (!report.parts.empty()) {
    auto parts = nlohmann::json::array();
    for (const auto& p : report.parts) parts.push_back(to_json(p));
    j["parts"] = std::move(parts);
  }
  return j;
}

}  // namespace cosan
