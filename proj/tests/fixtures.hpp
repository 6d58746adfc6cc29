#pragma once

// Tabulated functors and transformations used as positive and negative
// controls by the verify tests and the acceptance suite.

#include <functional>
#include <string>

#include "cosan/cosan.hpp"
#include "cosan/tabulated.hpp"

namespace fixture {

using namespace cosan;

inline TabFunctor from_rule(const LevelNames& sets, const std::function<Elem(const FinFun&, Elem)>& act) {
  std::map<FinFun, Table> tables;
  for (const auto& f : window_functions(sets.size() - 1)) {
    Table t(sets[f.cod()].size());
    for (Elem x = 0; x < t.size(); ++x) t[x] = act(f, x);
    tables.emplace(f, std::move(t));
  }
  return TabFunctor(sets, std::move(tables));
}

// R(X) = subsets of X x X, acting by inverse image along f x f. Functorial
// but not co-semi-analytic.
inline TabFunctor relations(std::size_t w) {
  LevelNames sets(w + 1);
  for (std::size_t k = 0; k <= w; ++k) {
    for (std::size_t r = 0; r < (std::size_t{1} << (k * k)); ++r) sets[k].push_back("R" + std::to_string(r));
  }
  return from_rule(sets, [](const FinFun& f, Elem r) {
    const auto m = f.dom(), n = f.cod();
    Elem out = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const auto bit = (f(i + 1) - 1) * n + (f(j + 1) - 1);
        if (r >> bit & 1u) out |= Elem{1} << (i * m + j);
      }
    }
    return out;
  });
}

// The tabulated powerset on levels 0..w (w >= 1) with one extra element p
// in F_w. p is fixed by every permutation of (w] and copies the full
// subset q along every other map into (w]; q is S_w-invariant, so this is
// functorial. No composite through a larger set exists inside the window,
// which is what makes the top level the only safe place for p.
inline TabFunctor phantom_powerset(std::size_t w) {
  const auto base = tabulate_cosan(builtin_inj_coeff("powerset", w), w).functor;
  auto sets = base.sets();
  const auto p = static_cast<Elem>(sets[w].size());
  sets[w].push_back("phantom");
  std::string full = "[1>2:1|" + std::to_string(w) + ">1:";
  for (std::size_t i = 0; i < w; ++i) full += i ? ",1" : "1";
  const auto& names = base.names(w);
  const auto q = static_cast<Elem>(std::find(names.begin(), names.end(), full + "]") - names.begin());
  return from_rule(sets, [&](const FinFun& f, Elem x) -> Elem {
    if (f.cod() != w || x != p) return base.apply(f, x);
    if (f.dom() == w && is_bijective(f)) return p;
    return base.apply(f, q);
  });
}

inline TabNat collapse_to_constant(std::size_t w) {
  auto source = tabulate_cosan(builtin_inj_coeff("powerset", w), w).functor;
  auto target = tabulate_cosan(builtin_inj_coeff("constant", w), w).functor;
  std::vector<Table> comps;
  for (std::size_t k = 0; k <= w; ++k) comps.emplace_back(source.size(k), 0);
  return {std::move(source), std::move(target), std::move(comps)};
}

inline InjNat yoneda(std::size_t w) {
  const auto one = builtin_inj_coeff("exp:1", w);
  const auto two = builtin_inj_coeff("exp:2", w);
  InjNat tau{one, two, {}};
  for (std::size_t n = 0; n <= w; ++n) {
    Table t;
    for (Elem x = 0; x < one.size(n); ++x) {
      // x is an injection (n] -> (1]; compose with 1 |-> 1 in (2].
      const auto image = compose(FinFun(2, {1}), FinFun::parse(one.names(n)[x]));
      const auto& names = two.names(n);
      t.push_back(static_cast<Elem>(std::find(names.begin(), names.end(), image.literal()) - names.begin()));
    }
    tau.components.emplace_back(std::move(t));
  }
  return tau;
}

// Copy of f with one table entry replaced.
inline TabFunctor mutate(const TabFunctor& f, const FinFun& fun, Elem at, Elem value) {
  auto tables = f.tables();
  tables.at(fun).at(at) = value;
  return TabFunctor(f.sets(), std::move(tables));
}

}  // namespace fixture
