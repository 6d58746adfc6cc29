#include "cosan/cli.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cosan/cosan.hpp"
#include "cosan/error.hpp"
#include "cosan/json_io.hpp"
#include "cosan/san.hpp"
#include "cosan/verify.hpp"

namespace cosan::cli {

namespace {

constexpr std::size_t kDefaultWindow = 3;
constexpr std::size_t kNatLimit = 64;

const std::vector<std::string> kCommands = {"eval",    "map",     "tabulate", "extract",  "extract-nat",
                                            "check",   "compose", "builtin",  "roundtrip"};
const std::vector<std::string> kChecks = {"functor", "pullbacks",   "cocone",  "semicartesian",
                                          "strength", "boolean-hom", "algebra", "all"};

struct Opts {
  bool coeff = false, san = false, tab = false, nat = false, size = false, at = false, window = false,
       fun = false, cap = false, alg = false;
};

const std::map<std::string, std::string> kDescriptions = {
    {"eval", "List the elements of the functor at (k]"},
    {"map", "Action of the functor on one function"},
    {"tabulate", "Tabulate the functor on the window"},
    {"extract", "Recover coefficients from a tabulated functor"},
    {"extract-nat", "Recover a coefficient transformation from a tabulated one"},
    {"check", "Run one of the verification checks"},
    {"compose", "Compose a surjection-coefficient functor with a coefficient functor"},
    {"builtin", "Print a built-in coefficient functor"},
    {"roundtrip", "Tabulate, extract and compare with the input"},
};

Opts opts_for(const std::string& command) {
  if (command == "eval") return {.coeff = true, .size = true, .window = true};
  if (command == "map") return {.coeff = true, .window = true, .fun = true};
  if (command == "tabulate") return {.coeff = true, .window = true};
  if (command == "extract") return {.tab = true, .window = true};
  if (command == "extract-nat") return {.coeff = true, .nat = true, .window = true};
  if (command == "check") {
    return {.coeff = true, .san = true, .tab = true, .nat = true, .size = true, .at = true, .window = true,
            .alg = true};
  }
  if (command == "compose") return {.coeff = true, .san = true, .window = true, .cap = true};
  if (command == "builtin") return {.coeff = true, .san = true, .window = true};
  return {.coeff = true, .window = true};  // roundtrip
}

std::size_t window_of(const Plan& plan) { return plan.window.value_or(kDefaultWindow); }

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

int exit_code(const CheckReport& r) { return r.passed() ? 0 : 1; }

json sizes_json(const std::vector<std::size_t>& sizes) { return sizes; }

// ---------------------------------------------------------------- commands

json run_eval(const Plan& plan) {
  const auto k = *plan.size;
  const auto a = load_inj_coeff(plan.coeffs.front(), plan.window.value_or(k));
  json elements = json::array();
  for (const auto& e : evaluate(a, k)) elements.push_back(to_json(a, e));
  return {{"command", "eval"}, {"size", k}, {"count", elements.size()}, {"elements", std::move(elements)}};
}

json run_map(const Plan& plan) {
  const auto f = FinFun::parse(plan.fun);
  const auto a = load_inj_coeff(plan.coeffs.front(), plan.window.value_or(std::max(f.dom(), f.cod())));
  json pairs = json::array();
  for (const auto& e : evaluate(a, f.cod())) {
    pairs.push_back({{"from", to_json(a, e)}, {"to", to_json(a, cosan_map(a, f, e))}});
  }
  return {{"command", "map"}, {"fun", f.literal()}, {"pairs", std::move(pairs)}};
}

TabFunctor tabulate_for(const Plan& plan, const std::string& ref) {
  const auto a = load_inj_coeff(ref, window_of(plan));
  return tabulate_cosan(a, plan.window.value_or(a.window())).functor;
}

std::pair<json, int> run_extract(const Plan& plan) {
  const auto f = load_tab_functor(plan.tab, window_of(plan));
  const auto extraction = extract_coefficients(f);
  json doc{{"command", "extract"}};
  CheckReport phi = CheckReport::error("phi-iso", {{"reason", "no coefficients were extracted"}});
  if (extraction.coeff) {
    doc["sizes"] = extraction.coeff->sizes();
    doc["coeff"] = inj_coeff_to_json(*extraction.coeff);
    phi = check_phi_iso(f, extraction);
  } else {
    doc["coeff"] = nullptr;
  }
  const auto report = combine("extract", {extraction.report, phi});
  doc["report"] = to_json(report);
  return {doc, exit_code(report)};
}

TabNat load_nat(const Plan& plan) {
  const auto doc = read_json_file(plan.nat);
  std::optional<TabFunctor> source, target;
  if (plan.coeffs.size() >= 1) source = tabulate_for(plan, plan.coeffs[0]);
  if (plan.coeffs.size() >= 2) target = tabulate_for(plan, plan.coeffs[1]);
  return tab_nat_from_json(doc, source ? &*source : nullptr, target ? &*target : nullptr);
}

std::pair<json, int> run_extract_nat(const Plan& plan) {
  require(plan.coeffs.size() == 2, "extract-nat needs --coeff SOURCE --coeff TARGET");
  const auto psi = load_nat(plan);
  const auto w = psi.source.window();
  const auto a = load_inj_coeff(plan.coeffs[0], plan.window.value_or(w));
  const auto b = load_inj_coeff(plan.coeffs[1], plan.window.value_or(w));
  try {
    auto tau = extract_nat(a, b, psi);
    return {inj_nat_to_json(tau), 0};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonSemicartesian && e.kind() != ErrorKind::RoundTripMismatch) throw;
    json witness = e.witness();
    witness["kind"] = std::string(to_string(e.kind()));
    return {to_json(CheckReport::fail("extract-nat", witness)), 1};
  }
}

CheckReport all_checks(const Plan& plan) {
  const auto f = load_tab_functor(plan.tab, window_of(plan));
  std::vector<CheckReport> parts;
  // Stop at the first error; failures do not stop the chain.
  auto add = [&](CheckReport r) {
    parts.push_back(std::move(r));
    return parts.back().result != Verdict::Error;
  };
  if (!add(validate_tab_functor(f)) || !add(check_pullback_preservation(f))) return combine("all", parts);
  for (std::size_t k = 0; k <= f.window(); ++k) {
    if (!add(check_cocone_colimit(f, k))) return combine("all", parts);
  }
  const auto extraction = extract_coefficients(f);
  if (!add(extraction.report) || !extraction.coeff) return combine("all", parts);
  if (!add(check_phi_iso(f, extraction))) return combine("all", parts);
  if (!plan.coeffs.empty()) {
    const auto supplied = load_inj_coeff(plan.coeffs.front(), f.window()).truncate(f.window());
    add(find_isomorphism(*extraction.coeff, supplied)
            ? CheckReport::pass("coefficient-iso")
            : CheckReport::fail("coefficient-iso", {{"extracted", extraction.coeff->sizes()},
                                                    {"supplied", supplied.sizes()}}));
  }
  return combine("all", parts);
}

CheckReport run_check(const Plan& plan) {
  const auto& kind = plan.check;
  auto need = [&](bool ok, const char* flag) { require(ok, "check " + kind + " needs " + flag); };
  if (kind == "functor" || kind == "pullbacks" || kind == "cocone" || kind == "all") need(!plan.tab.empty(), "--tab");
  if (kind == "semicartesian") need(!plan.nat.empty(), "--nat");
  if (kind == "strength" || kind == "algebra") need(!plan.san.empty(), "--san");
  if (kind == "algebra") need(!plan.alg.empty(), "--alg");

  if (kind == "functor") return validate_tab_functor(load_tab_functor(plan.tab, window_of(plan)));
  if (kind == "pullbacks") return check_pullback_preservation(load_tab_functor(plan.tab, window_of(plan)));
  if (kind == "cocone") {
    const auto f = load_tab_functor(plan.tab, window_of(plan));
    if (plan.at) return check_cocone_colimit(f, *plan.at);
    std::vector<CheckReport> parts;
    for (std::size_t k = 0; k <= f.window(); ++k) parts.push_back(check_cocone_colimit(f, k));
    return combine("cocone", std::move(parts));
  }
  if (kind == "semicartesian") return check_semicartesian(load_nat(plan));
  if (kind == "strength") return check_strength_semicartesian(load_sur_coeff(plan.san), window_of(plan));
  if (kind == "boolean-hom") return boolean_hom_check(window_of(plan));
  if (kind == "algebra") {
    const auto b = load_sur_coeff(plan.san);
    const auto alg = load_algebra(plan.alg);
    auto laws = b.kind() == SurCoeff::Kind::PPlus
                    ? check_pplus_algebra_laws(alg)
                    : CheckReport::error("pplus-algebra", {{"reason", "the algebra laws are implemented for pplus"}});
    return combine("algebra", {std::move(laws), check_exponential_pointwise(b, alg, plan.size.value_or(2))});
  }
  return all_checks(plan);
}

std::pair<json, int> run_compose(const Plan& plan) {
  const auto b = load_sur_coeff(plan.san);
  const auto a = load_inj_coeff(plan.coeffs.front(), window_of(plan));
  const auto result = compose_extract(b, a, plan.window.value_or(a.window()), plan.cap);
  json doc{{"command", "compose"}, {"composite_sizes", result.composite.sizes()}};
  doc["sizes"] = result.extraction.coeff ? sizes_json(result.extraction.coeff->sizes()) : json(nullptr);
  doc["coeff"] = result.extraction.coeff ? inj_coeff_to_json(*result.extraction.coeff) : json(nullptr);
  const auto report = combine("compose", {result.extraction.report, result.phi});
  doc["report"] = to_json(report);
  return {doc, exit_code(report)};
}

json run_builtin(const Plan& plan) {
  if (!plan.coeffs.empty()) return inj_coeff_to_json(load_inj_coeff(plan.coeffs.front(), window_of(plan)));
  if (!plan.san.empty()) return sur_coeff_to_json(load_sur_coeff(plan.san));
  return {{"inj-coeff", {"builtin:powerset", "builtin:exp:N", "builtin:partition", "builtin:constant"}},
          {"sur-coeff", {"builtin:pplus", "builtin:identity"}},
          {"algebra", {"max:N"}}};
}

bool same_nat(const InjNat& tau, const InjNat& back) {
  const auto levels = std::max(tau.components.size(), back.components.size());
  for (std::size_t n = 0; n < levels; ++n) {
    if (n <= tau.source.window() && tau.source.size(n) == 0) continue;
    const auto* lhs = n < tau.components.size() && tau.components[n] ? &*tau.components[n] : nullptr;
    const auto* rhs = n < back.components.size() && back.components[n] ? &*back.components[n] : nullptr;
    if (!lhs || !rhs || *lhs != *rhs) return false;
  }
  return true;
}

std::pair<json, int> run_roundtrip(const Plan& plan) {
  const auto a = load_inj_coeff(plan.coeffs.front(), window_of(plan));
  const auto w = plan.window.value_or(a.window());
  const auto coeff = a.truncate(w);
  std::vector<CheckReport> parts{validate_inj_coeff(coeff)};
  const auto tab = tabulate_cosan(coeff, w);
  parts.push_back(validate_tab_functor(tab.functor));
  const auto extraction = extract_coefficients(tab.functor);
  parts.push_back(extraction.report);
  json doc{{"command", "roundtrip"}, {"tab_sizes", tab.functor.sizes()}};
  if (extraction.coeff) {
    doc["extracted_sizes"] = extraction.coeff->sizes();
    parts.push_back(find_isomorphism(*extraction.coeff, coeff)
                        ? CheckReport::pass("coefficient-iso")
                        : CheckReport::fail("coefficient-iso", {{"extracted", extraction.coeff->sizes()},
                                                                {"supplied", coeff.sizes()}}));
    parts.push_back(check_phi_iso(tab.functor, extraction));
  }

  std::vector<InjNat> nats{identity_nat(coeff)};
  for (auto& t : enumerate_inj_nats(coeff, coeff, kNatLimit)) {
    InjNat tau{coeff, coeff, {}};
    for (auto& c : t) tau.components.emplace_back(std::move(c));
    nats.push_back(std::move(tau));
  }
  CheckReport nat_report = CheckReport::pass("nat-roundtrip");
  for (std::size_t i = 0; i < nats.size() && nat_report.passed(); ++i) {
    try {
      if (!same_nat(nats[i], extract_nat(coeff, coeff, tabulate_nat(nats[i], w)))) {
        nat_report = CheckReport::fail("nat-roundtrip", {{"transformation", inj_nat_to_json(nats[i])}});
      }
    } catch (const Error& e) {
      nat_report = CheckReport::fail("nat-roundtrip", {{"transformation", inj_nat_to_json(nats[i])},
                                                       {"error", std::string(to_string(e.kind()))}});
    }
  }
  doc["transformations"] = nats.size();
  parts.push_back(std::move(nat_report));
  const auto report = combine("roundtrip", std::move(parts));
  doc["report"] = to_json(report);
  return {doc, exit_code(report)};
}

std::pair<json, int> dispatch(const Plan& plan) {
  const auto& c = plan.command;
  auto need_coeff = [&] { require(!plan.coeffs.empty(), c + " needs --coeff"); };
  if (c == "eval") {
    need_coeff();
    require(plan.size.has_value(), "eval needs --size");
    return {run_eval(plan), 0};
  }
  if (c == "map") {
    need_coeff();
    require(!plan.fun.empty(), "map needs --fun");
    return {run_map(plan), 0};
  }
  if (c == "tabulate") {
    need_coeff();
    return {tab_functor_to_json(tabulate_for(plan, plan.coeffs.front())), 0};
  }
  if (c == "extract") {
    require(!plan.tab.empty(), "extract needs --tab");
    return run_extract(plan);
  }
  if (c == "extract-nat") {
    require(!plan.nat.empty(), "extract-nat needs --nat");
    return run_extract_nat(plan);
  }
  if (c == "check") {
    const auto report = run_check(plan);
    return {to_json(report), exit_code(report)};
  }
  if (c == "compose") {
    need_coeff();
    require(!plan.san.empty(), "compose needs --san");
    return run_compose(plan);
  }
  if (c == "builtin") return {run_builtin(plan), 0};
  need_coeff();
  return run_roundtrip(plan);
}

void emit(const json& doc, const Plan& plan, std::ostream& out) {
  const auto text = doc.dump(2) + "\n";
  if (plan.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(plan.out, std::ios::binary);
  if (!file) throw Error(ErrorKind::Malformed, "cannot write " + plan.out);
  file << text;
}

}  // namespace

Plan build_plan(const std::vector<std::string>& args) {
  Plan plan;
  CLI::App app{"Co-semi-analytic functors on a finite window", "cosan"};
  app.require_subcommand(1);
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name, kDescriptions.at(name));
    const auto o = opts_for(name);
    if (name == "check") {
      sub->add_option("kind", plan.check, "What to check")->required()->check(CLI::IsMember(kChecks));
    }
    if (o.coeff) {
      sub->add_option("--coeff", plan.coeffs, "Coefficient functor: builtin:NAME or inj-coeff file")
          ->allow_extra_args(false);
    }
    if (o.san) sub->add_option("--san", plan.san, "Surjection coefficients: builtin:NAME or sur-coeff file");
    if (o.tab) sub->add_option("--tab", plan.tab, "Tabulated functor: builtin:NAME or tab-functor file");
    if (o.nat) sub->add_option("--nat", plan.nat, "tab-nat file");
    if (o.size) sub->add_option("--size", plan.size, "Size k of the set (k]");
    if (o.at) sub->add_option("--at", plan.at, "Level k of the cocone check");
    if (o.window) sub->add_option("--window", plan.window, "Window W");
    if (o.fun) sub->add_option("--fun", plan.fun, "Function literal m>n:v1,...,vm");
    if (o.cap) sub->add_option("--cap", plan.cap, "Largest composite level size")->capture_default_str();
    if (o.alg) sub->add_option("--alg", plan.alg, "Algebra: max:N or algebra file");
    sub->add_option("--out", plan.out, "Write the JSON document to this file");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    plan.help = true;
    plan.help_text = app.help();
    for (auto* sub : app.get_subcommands()) plan.help_text = sub->help();
    return plan;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  plan.command = app.get_subcommands().front()->get_name();
  return plan;
}

int execute(const Plan& plan, std::ostream& out) {
  if (plan.help) {
    out << plan.help_text;
    return 0;
  }
  try {
    auto [doc, code] = dispatch(plan);
    emit(doc, plan, out);
    return code;
  } catch (const UsageError& e) {
    out << json{{"error", "usage"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  } catch (const Error& e) {
    out << json{{"error", to_string(e.kind())}, {"message", e.what()}, {"witness", e.witness()}}.dump(2) << "\n";
    return 2;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Plan plan;
  try {
    plan = build_plan(args);
  } catch (const UsageError& e) {
    err << e.what() << "\n";
    out << json{{"error", "usage"}, {"message", e.what()}}.dump(2) << "\n";
    return 2;
  }
  return execute(plan, out);
}

}  // namespace cosan::cli
