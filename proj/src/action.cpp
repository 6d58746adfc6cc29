#include "cosan/action.hpp"

#include "cosan/cosan.hpp"
#include "cosan/error.hpp"
#include "cosan/san.hpp"

namespace cosan {

TabFunctor compose_tabulate(const SurCoeff& b, const InjCoeff& a, std::size_t w, std::size_t cap) {
  const auto inner = tabulate_cosan(a, w);
  const auto& check = inner.functor;

  std::vector<SanIndex> outer;
  LevelNames names(w + 1);
  for (std::size_t k = 0; k <= w; ++k) {
    const auto count = san_size(b, check.size(k));
    if (count > cap) {
      throw Error(ErrorKind::ResourceBound, "composite level " + std::to_string(k) + " exceeds the cap",
                  {{"level", k}, {"size", count}, {"cap", cap}});
    }
    outer.emplace_back(san_evaluate(b, check.size(k)));
    for (const auto& e : outer.back().elements()) {
      std::string label = b.element_name(e.level, e.coeff);
      label = (label == "*" ? "" : label) + "{";
      for (std::size_t j = 1; j <= e.level; ++j) {
        if (j > 1) label += ",";
        label += check.names(k)[e.mono(j) - 1];
      }
      names[k].push_back(label + "}");
    }
  }

  std::map<FinFun, Table> tables;
  for (const auto& f : window_functions(w)) {
    const auto inner_map = check.map(f);
    const auto& from = outer[f.cod()].elements();
    Table t(from.size());
    for (Elem i = 0; i < from.size(); ++i) t[i] = outer[f.dom()].index_of(san_map(b, inner_map, from[i]));
    tables.emplace(f, std::move(t));
  }
  return TabFunctor(std::move(names), std::move(tables));
}

ComposeResult compose_extract(const SurCoeff& b, const InjCoeff& a, std::size_t w, std::size_t cap) {
  auto composite = compose_tabulate(b, a, w, cap);
  auto extraction = extract_coefficients(composite);
  auto phi = check_phi_iso(composite, extraction);
  return {std::move(composite), std::move(extraction), std::move(phi)};
}

}  // namespace cosan
