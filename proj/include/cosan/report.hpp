#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace cosan {

enum class Verdict { Pass, Fail, Error };

struct CheckReport {
  std::string check;
  Verdict result = Verdict::Pass;
  nlohmann::json witness = nullptr;
  std::vector<CheckReport> parts;

  bool passed() const noexcept { return result == Verdict::Pass; }

  static CheckReport pass(std::string name) { return {std::move(name), Verdict::Pass, nullptr, {}}; }
  static CheckReport fail(std::string name, nlohmann::json witness) {
    return {std::move(name), Verdict::Fail, std::move(witness), {}};
  }
  static CheckReport error(std::string name, nlohmann::json witness) {
    return {std::move(name), Verdict::Error, std::move(witness), {}};
  }
};

// Folds sub-reports into one: error dominates fail, fail dominates pass.
CheckReport combine(std::string name, std::vector<CheckReport> parts);

nlohmann::json to_json(const CheckReport& report);

}  // namespace cosan
