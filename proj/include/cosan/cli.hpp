#pragma once

// Command-line front end: argv -> Plan -> one JSON document on the output
// stream. Exit codes: 0 success, 1 some check failed, 2 bad input.

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosan/action.hpp"

namespace cosan::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Plan {
  std::string command;  // eval, map, tabulate, extract, extract-nat, check, compose, builtin, roundtrip
  std::string check;    // functor, pullbacks, cocone, semicartesian, strength, boolean-hom, algebra, all
  std::vector<std::string> coeffs;
  std::string san, tab, nat, fun, out, alg;
  std::optional<std::size_t> size, at, window;
  std::size_t cap = kDefaultLevelCap;
  bool help = false;
  std::string help_text;
};

/// Arguments exclude the program name. Throws UsageError.
Plan build_plan(const std::vector<std::string>& args);

int execute(const Plan& plan, std::ostream& out);

/// build_plan + execute; usage errors become exit 2 with a JSON message.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cosan::cli
