#include "cosan/cosan.hpp"

#include "cosan/error.hpp"

namespace cosan {

CosanElem canonicalize_pair(const InjCoeff& a, Elem element, const FinFun& epi) {
  const auto n = epi.cod();
  if (n > a.window()) throw Error(ErrorKind::OutOfWindow, "epi target outside window", epi.literal());
  if (element >= a.size(n)) {
    throw Error(ErrorKind::LevelMismatch, "coefficient is not an element of A_" + std::to_string(n),
                {{"level", n}, {"element", element}});
  }
  auto [sigma, canonical] = canonical_epi_form(epi);
  return {n, act_inj(a, sigma, element), std::move(canonical)};
}

CosanElem normalize_general_pair(const InjCoeff& a, Elem element, const FinFun& f) {
  if (f.cod() > a.window()) throw Error(ErrorKind::OutOfWindow, "function target outside window", f.literal());
  auto [q, mono] = epi_mono_factorize(f);
  return canonicalize_pair(a, act_inj(a, mono, element), q);
}

std::vector<CosanElem> evaluate(const InjCoeff& a, std::size_t k) {
  if (k > a.window()) throw Error(ErrorKind::OutOfWindow, "size outside window", k);
  std::vector<CosanElem> out;
  for (std::size_t n = 0; n <= k; ++n) {
    const auto epis = canonical_epis(k, n);
    for (Elem x = 0; x < a.size(n); ++x) {
      for (const auto& e : epis) out.push_back({n, x, e});
    }
  }
  return out;
}

CosanElem cosan_map(const InjCoeff& a, const FinFun& f, const CosanElem& e) {
  return normalize_general_pair(a, e.coeff, compose(e.epi, f));
}

CosanElem apply_nat(const InjNat& tau, const CosanElem& e) {
  if (e.level >= tau.components.size() || !tau.components[e.level]) {
    throw Error(ErrorKind::IllTyped, "transformation undefined at level " + std::to_string(e.level), e.level);
  }
  const auto& t = *tau.components[e.level];
  if (e.coeff >= t.size()) {
    throw Error(ErrorKind::IllTyped, "coefficient outside the component's domain",
                {{"level", e.level}, {"element", e.coeff}});
  }
  return canonicalize_pair(tau.target, t[e.coeff], e.epi);
}

nlohmann::json to_json(const InjCoeff& a, const CosanElem& e) {
  return {{"n", e.level}, {"a", a.names(e.level).at(e.coeff)}, {"epi", e.epi.literal()}};
}

Elem TabulatedCosan::index_of(const CosanElem& e) const {
  const auto k = e.epi.dom();
  if (k >= index.size()) throw Error(ErrorKind::OutOfWindow, "element over a set outside the window", k);
  auto it = index[k].find(e);
  if (it == index[k].end()) throw Error(ErrorKind::Malformed, "element is not canonical");
  return it->second;
}

TabulatedCosan tabulate_cosan(const InjCoeff& a, std::size_t w) {
  if (w > a.window()) throw Error(ErrorKind::OutOfWindow, "tabulation window exceeds coefficient window", w);
  TabulatedCosan out;
  LevelNames names(w + 1);
  out.index.resize(w + 1);
  for (std::size_t k = 0; k <= w; ++k) {
    out.elements.push_back(evaluate(a, k));
    for (Elem i = 0; i < out.elements[k].size(); ++i) {
      const auto& e = out.elements[k][i];
      out.index[k].emplace(e, i);
      names[k].push_back("[" + a.names(e.level)[e.coeff] + "|" + e.epi.literal() + "]");
    }
  }
  std::map<FinFun, Table> tables;
  for (const auto& f : window_functions(w)) {
    const auto& from = out.elements[f.cod()];
    Table t(from.size());
    for (Elem i = 0; i < from.size(); ++i) t[i] = out.index_of(cosan_map(a, f, from[i]));
    tables.emplace(f, std::move(t));
  }
  out.functor = TabFunctor(std::move(names), std::move(tables));
  return out;
}

TabNat tabulate_nat(const InjNat& tau, std::size_t w) {
  auto source = tabulate_cosan(tau.source, w);
  auto target = tabulate_cosan(tau.target, w);
  std::vector<Table> components(w + 1);
  for (std::size_t k = 0; k <= w; ++k) {
    for (const auto& e : source.elements[k]) components[k].push_back(target.index_of(apply_nat(tau, e)));
  }
  return {std::move(source.functor), std::move(target.functor), std::move(components)};
}

}  // namespace cosan
