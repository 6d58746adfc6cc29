#include "cosan/json_io.hpp"

#include <fstream>

#include "cosan/cosan.hpp"
#include "cosan/error.hpp"

namespace cosan {

namespace {

constexpr std::string_view kBuiltin = "builtin:";

void expect_kind(const json& j, std::string_view kind) {
  if (!j.is_object() || !j.contains("kind") || j.at("kind") != kind) {
    throw Error(ErrorKind::Malformed, "expected a document of kind " + std::string(kind));
  }
}

// Wraps nlohmann's type and key errors so callers only see Malformed.
template <class F>
auto guarded(std::string_view what, F&& body) {
  try {
    return body();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Malformed, std::string(what) + ": " + e.what());
  }
}

json maps_to_json(const std::map<FinFun, Table>& tables) {
  json maps = json::array();
  for (const auto& [f, t] : tables) {
    json one = json::array();
    for (auto x : t) one.push_back(x + 1);
    maps.push_back({{"fun", f.literal()}, {"table", std::move(one)}});
  }
  return maps;
}

std::map<FinFun, Table> maps_from_json(const json& maps) {
  std::map<FinFun, Table> out;
  for (const auto& entry : maps) {
    auto f = FinFun::parse(entry.at("fun").get<std::string>());
    Table t;
    for (const auto& x : entry.at("table")) {
      const auto v = x.get<long long>();
      if (v < 1) throw Error(ErrorKind::Malformed, "table entries are 1-based", f.literal());
      t.push_back(static_cast<Elem>(v - 1));
    }
    if (!out.emplace(f, std::move(t)).second) {
      throw Error(ErrorKind::Malformed, "duplicate table", f.literal());
    }
  }
  return out;
}

LevelNames sets_from_json(const json& j) {
  auto sets = j.at("sets").get<LevelNames>();
  if (j.contains("window") && j.at("window").get<std::size_t>() + 1 != sets.size()) {
    throw Error(ErrorKind::Malformed, "window disagrees with the number of level sets");
  }
  if (sets.empty()) throw Error(ErrorKind::Malformed, "at least level 0 is required");
  return sets;
}

std::string builtin_name(const std::string& ref) { return ref.substr(kBuiltin.size()); }
bool is_builtin(const std::string& ref) { return ref.starts_with(kBuiltin); }

}  // namespace

json inj_coeff_to_json(const InjCoeff& a) {
  return {{"kind", "inj-coeff"}, {"window", a.window()}, {"sets", a.sets()}, {"maps", maps_to_json(a.actions())}};
}

InjCoeff inj_coeff_from_json(const json& j) {
  expect_kind(j, "inj-coeff");
  return guarded("inj-coeff", [&] { return InjCoeff(sets_from_json(j), maps_from_json(j.at("maps"))); });
}

json sur_coeff_to_json(const SurCoeff& b) {
  if (b.kind() != SurCoeff::Kind::Tabulated) return {{"kind", "sur-coeff"}, {"rule", b.name()}};
  const auto w = *b.window();
  LevelNames sets(w + 1);
  std::map<FinFun, Table> tables;
  for (std::size_t n = 0; n <= w; ++n) {
    for (Elem x = 0; x < b.size(n); ++x) sets[n].push_back(b.element_name(n, x));
    for (std::size_t m = 0; m <= n; ++m) {
      for (const auto& s : enumerate(FunKind::Sur, n, m)) tables.emplace(s, b.table(s));
    }
  }
  return {{"kind", "sur-coeff"}, {"window", w}, {"sets", sets}, {"maps", maps_to_json(tables)}};
}

SurCoeff sur_coeff_from_json(const json& j) {
  expect_kind(j, "sur-coeff");
  return guarded("sur-coeff", [&] {
    if (j.contains("rule")) return builtin_sur_coeff(j.at("rule").get<std::string>());
    return SurCoeff::tabulated(sets_from_json(j), maps_from_json(j.at("maps")));
  });
}

json tab_functor_to_json(const TabFunctor& f) {
  return {{"kind", "tab-functor"}, {"window", f.window()}, {"sets", f.sets()}, {"maps", maps_to_json(f.tables())}};
}

TabFunctor tab_functor_from_json(const json& j) {
  expect_kind(j, "tab-functor");
  return guarded("tab-functor", [&] { return TabFunctor(sets_from_json(j), maps_from_json(j.at("maps"))); });
}

json tab_nat_to_json(const TabNat& psi) {
  json levels = json::array();
  for (const auto& t : psi.components) {
    json one = json::array();
    for (auto x : t) one.push_back(x + 1);
    levels.push_back(std::move(one));
  }
  return {{"kind", "tab-nat"},
          {"levels", std::move(levels)},
          {"source", tab_functor_to_json(psi.source)},
          {"target", tab_functor_to_json(psi.target)}};
}

TabNat tab_nat_from_json(const json& j, const TabFunctor* source, const TabFunctor* target) {
  expect_kind(j, "tab-nat");
  return guarded("tab-nat", [&] {
    TabNat psi;
    if (j.contains("source")) {
      psi.source = tab_functor_from_json(j.at("source"));
    } else if (source) {
      psi.source = *source;
    } else {
      throw Error(ErrorKind::Malformed, "tab-nat without a source functor");
    }
    if (j.contains("target")) {
      psi.target = tab_functor_from_json(j.at("target"));
    } else if (target) {
      psi.target = *target;
    } else {
      throw Error(ErrorKind::Malformed, "tab-nat without a target functor");
    }
    if (psi.source.window() != psi.target.window()) {
      throw Error(ErrorKind::Malformed, "source and target windows differ");
    }
    const auto& levels = j.at("levels");
    if (levels.size() != psi.source.window() + 1) {
      throw Error(ErrorKind::Malformed, "one component per level is required");
    }
    for (std::size_t k = 0; k < levels.size(); ++k) {
      Table t;
      for (const auto& x : levels[k]) {
        const auto v = x.get<long long>();
        if (v < 1 || static_cast<std::size_t>(v) > psi.target.size(k)) {
          throw Error(ErrorKind::Malformed, "component entry out of range", {{"level", k}, {"value", v}});
        }
        t.push_back(static_cast<Elem>(v - 1));
      }
      if (t.size() != psi.source.size(k)) {
        throw Error(ErrorKind::Malformed, "component is not total", {{"level", k}});
      }
      psi.components.push_back(std::move(t));
    }
    return psi;
  });
}

json inj_nat_to_json(const InjNat& tau) {
  json levels = json::array();
  for (const auto& t : tau.components) {
    if (!t) {
      levels.push_back(nullptr);
      continue;
    }
    json one = json::array();
    for (auto x : *t) one.push_back(x + 1);
    levels.push_back(std::move(one));
  }
  return {{"kind", "inj-nat"}, {"levels", std::move(levels)}};
}

InjNat inj_nat_from_json(const json& j, const InjCoeff& source, const InjCoeff& target) {
  expect_kind(j, "inj-nat");
  return guarded("inj-nat", [&] {
    InjNat tau{source, target, {}};
    for (const auto& level : j.at("levels")) {
      if (level.is_null()) {
        tau.components.emplace_back();
        continue;
      }
      Table t;
      for (const auto& x : level) t.push_back(x.get<Elem>() - 1);
      tau.components.emplace_back(std::move(t));
    }
    return tau;
  });
}

json algebra_to_json(const Algebra& alg) { return {{"carrier", alg.carrier}, {"alpha", alg.alpha}}; }

Algebra algebra_from_json(const json& j) {
  return guarded("algebra", [&] {
    return Algebra{j.at("carrier").get<std::size_t>(), j.at("alpha").get<std::vector<Point>>()};
  });
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Malformed, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Malformed, path + ": " + e.what());
  }
}

InjCoeff load_inj_coeff(const std::string& ref, std::size_t window) {
  if (is_builtin(ref)) return builtin_inj_coeff(builtin_name(ref), window);
  return inj_coeff_from_json(read_json_file(ref));
}

SurCoeff load_sur_coeff(const std::string& ref) {
  if (is_builtin(ref)) return builtin_sur_coeff(builtin_name(ref));
  return sur_coeff_from_json(read_json_file(ref));
}

TabFunctor load_tab_functor(const std::string& ref, std::size_t window) {
  if (is_builtin(ref)) return tabulate_cosan(builtin_inj_coeff(builtin_name(ref), window), window).functor;
  return tab_functor_from_json(read_json_file(ref));
}

Algebra load_algebra(const std::string& ref) {
  if (ref.starts_with("max:")) {
    try {
      return max_algebra(std::stoul(ref.substr(4)));
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Malformed, "bad algebra name " + ref);
    }
  }
  return algebra_from_json(read_json_file(ref));
}

}  // namespace cosan
