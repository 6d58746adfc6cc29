#include "cosan/verify.hpp"

#include <map>

#include "cosan/cosan.hpp"
#include "cosan/error.hpp"
#include "union_find.hpp"

namespace cosan {

namespace {

constexpr Elem kAbsent = static_cast<Elem>(-1);

nlohmann::json element_witness(const TabFunctor& f, std::size_t level, Elem x) {
  return {{"level", level}, {"element", f.names(level).at(x)}};
}

// Lexicographic rank of a function (k]->(n] among all of them.
std::size_t function_rank(std::span<const Point> values, std::size_t n) {
  std::size_t r = 0;
  for (Point v : values) r = r * n + (v - 1);
  return r;
}

}  // namespace

CheckReport validate_tab_functor(const TabFunctor& f) {
  const std::string name = "functor";
  const auto w = f.window();
  for (std::size_t n = 0; n <= w; ++n) {
    const auto& t = f.table(FinFun::identity(n));
    for (Elem x = 0; x < t.size(); ++x) {
      if (t[x] != x) return CheckReport::fail(name, {{"law", "identity"}, {"at", element_witness(f, n, x)}});
    }
  }
  // F(g . h) == F(h) . F(g) for h:(a]->(b], g:(b]->(c].
  std::vector<std::vector<FinFun>> from(w + 1);
  for (const auto& fun : window_functions(w)) from[fun.dom()].push_back(fun);
  for (std::size_t b = 0; b <= w; ++b) {
    for (const auto& g : from[b]) {
      const auto& tg = f.table(g);
      for (std::size_t a = 0; a <= w; ++a) {
        for (const auto& h : from[a]) {
          if (h.cod() != b) continue;
          const auto& th = f.table(h);
          const auto& tgh = f.table(compose(g, h));
          for (Elem x = 0; x < tg.size(); ++x) {
            if (th[tg[x]] != tgh[x]) {
              return CheckReport::fail(name, {{"law", "composition"},
                                              {"f", h.literal()},
                                              {"g", g.literal()},
                                              {"at", element_witness(f, g.cod(), x)}});
            }
          }
        }
      }
    }
  }
  return CheckReport::pass(name);
}

CheckReport check_pullback_preservation(const TabFunctor& f) {
  const std::string name = "pullbacks";
  const auto w = f.window();
  for (std::size_t z = 0; z <= w; ++z) {
    for (std::size_t x = 0; x <= z; ++x) {
      for (const auto& e : enumerate(FunKind::Sur, z, x)) {
        for (std::size_t y = 0; y <= w; ++y) {
          for (const auto& g : enumerate(FunKind::All, z, y)) {
            const auto po = pushout(e, g);
            const Square sq{f.map(po.in_y), f.map(po.in_x), f.map(g), f.map(e)};
            auto verdict = is_pullback_square(sq);
            if (!verdict.is_pullback) {
              return CheckReport::fail(name, {{"epi", e.literal()},
                                              {"g", g.literal()},
                                              {"pushout_size", po.size},
                                              {"square", verdict.witness}});
            }
          }
        }
      }
    }
  }
  return CheckReport::pass(name);
}

CheckReport check_cocone_colimit(const TabFunctor& f, std::size_t k) {
  const std::string name = "cocone@" + std::to_string(k);
  const auto w = f.window();
  if (k > w) return CheckReport::error(name, {{"reason", "k exceeds the window"}, {"k", k}, {"window", w}});

  // Nodes (n, h:(k]->(n], c in F_n), numbered level by level.
  std::vector<std::vector<FinFun>> legs(w + 1);
  std::vector<std::size_t> offset(w + 2, 0);
  for (std::size_t n = 0; n <= w; ++n) {
    legs[n] = enumerate(FunKind::All, k, n);
    offset[n + 1] = offset[n] + legs[n].size() * f.size(n);
  }
  auto node = [&](std::size_t n, std::size_t leg, Elem c) { return offset[n] + leg * f.size(n) + c; };

  detail::DisjointSets classes(offset[w + 1]);
  for (std::size_t n = 0; n <= w; ++n) {
    for (std::size_t n2 = 0; n2 <= w; ++n2) {
      for (const auto& g : enumerate(FunKind::All, n, n2)) {
        const auto& tg = f.table(g);
        for (std::size_t leg = 0; leg < legs[n].size(); ++leg) {
          const auto gh = compose(g, legs[n][leg]);
          const auto leg2 = function_rank(gh.values(), n2);
          for (Elem c2 = 0; c2 < tg.size(); ++c2) classes.unite(node(n, leg, tg[c2]), node(n2, leg2, c2));
        }
      }
    }
  }

  // Classes must map bijectively onto F_k along c |-> F(h)(c).
  std::vector<std::size_t> owner(f.size(k), kAbsent);
  std::map<std::size_t, Elem> class_image;
  for (std::size_t n = 0; n <= w; ++n) {
    for (std::size_t leg = 0; leg < legs[n].size(); ++leg) {
      const auto& th = f.table(legs[n][leg]);
      for (Elem c = 0; c < f.size(n); ++c) {
        const auto id = node(n, leg, c);
        const auto root = classes.find(id);
        const auto image = th[c];
        auto [it, fresh] = class_image.emplace(root, image);
        if (!fresh) {
          if (it->second != image) {
            return CheckReport::fail(name, {{"kind", "ill-defined"}, {"at", element_witness(f, n, c)}});
          }
          continue;
        }
        if (owner[image] != kAbsent) {
          // Two distinct classes reach the same element of F_k.
          auto describe = [&](std::size_t node_id) {
            std::size_t lv = 0;
            while (offset[lv + 1] <= node_id) ++lv;
            const auto local = node_id - offset[lv];
            const auto lg = local / f.size(lv);
            const auto el = local % f.size(lv);
            return nlohmann::json{{"level", lv}, {"leg", legs[lv][lg].literal()}, {"element", f.names(lv)[el]}};
          };
          return CheckReport::fail(name, {{"kind", "injectivity"},
                                          {"image", f.names(k)[image]},
                                          {"first", describe(owner[image])},
                                          {"second", describe(id)}});
        }
        owner[image] = id;
      }
    }
  }
  for (Elem x = 0; x < f.size(k); ++x) {
    if (owner[x] == kAbsent) {
      return CheckReport::fail(name, {{"kind", "surjectivity"}, {"missed", element_witness(f, k, x)}});
    }
  }
  return CheckReport::pass(name);
}

CheckReport check_naturality(const TabNat& psi) {
  const std::string name = "naturality";
  const auto& src = psi.source;
  const auto& dst = psi.target;
  if (src.window() != dst.window() || psi.components.size() != src.window() + 1) {
    return CheckReport::error(name, {{"reason", "window mismatch"}});
  }
  for (std::size_t k = 0; k <= src.window(); ++k) {
    const auto& c = psi.components[k];
    if (c.size() != src.size(k)) return CheckReport::error(name, {{"reason", "component size"}, {"level", k}});
    for (Elem v : c) {
      if (v >= dst.size(k)) return CheckReport::error(name, {{"reason", "component out of range"}, {"level", k}});
    }
  }
  for (const auto& fun : window_functions(src.window())) {
    const auto& ts = src.table(fun);
    const auto& td = dst.table(fun);
    const auto& top = psi.components[fun.cod()];
    const auto& bottom = psi.components[fun.dom()];
    for (Elem x = 0; x < ts.size(); ++x) {
      if (bottom[ts[x]] != td[top[x]]) {
        return CheckReport::fail(name, {{"f", fun.literal()}, {"at", element_witness(src, fun.cod(), x)}});
      }
    }
  }
  return CheckReport::pass(name);
}

CheckReport check_semicartesian(const TabNat& psi) {
  const std::string name = "semicartesian";
  auto natural = check_naturality(psi);
  if (!natural.passed()) {
    return CheckReport::error(name, {{"reason", "NotNatural"}, {"naturality", to_json(natural)}});
  }
  const auto& src = psi.source;
  const auto& dst = psi.target;
  for (const auto& g : window_functions(src.window(), FunKind::Sur)) {
    const auto a = g.dom(), b = g.cod();
    const Square sq{table_fun(psi.components[b], dst.size(b)), src.map(g), dst.map(g),
                    table_fun(psi.components[a], dst.size(a))};
    auto verdict = is_pullback_square(sq);
    if (!verdict.is_pullback) return CheckReport::fail(name, {{"g", g.literal()}, {"square", verdict.witness}});
  }
  return CheckReport::pass(name);
}

Extraction extract_coefficients(const TabFunctor& f) {
  const std::string name = "extract-coefficients";
  const auto w = f.window();
  Extraction out;
  std::vector<std::vector<Elem>> position(w + 1);
  LevelNames sets(w + 1);
  for (std::size_t n = 0; n <= w; ++n) {
    std::vector<char> degenerate(f.size(n), 0);
    for (std::size_t m = 0; m < n; ++m) {
      for (const auto& h : enumerate(FunKind::Sur, n, m)) {
        for (Elem y : f.table(h)) degenerate[y] = 1;
      }
    }
    position[n].assign(f.size(n), kAbsent);
    Table embed;
    for (Elem x = 0; x < f.size(n); ++x) {
      if (degenerate[x]) continue;
      position[n][x] = embed.size();
      embed.push_back(x);
      sets[n].push_back(f.names(n)[x]);
    }
    out.embedding.push_back(std::move(embed));
  }

  std::map<FinFun, Table> actions;
  for (std::size_t m = 0; m <= w; ++m) {
    for (const auto& inj : injections_into(m)) {
      const auto n = inj.dom();
      const auto& t = f.table(inj);
      Table restricted;
      for (Elem x : out.embedding[m]) {
        const auto y = position[n][t[x]];
        if (y == kAbsent) {
          out.report = CheckReport::fail(name, {{"kind", "WellDefinednessFailure"},
                                                {"injection", inj.literal()},
                                                {"element", f.names(m)[x]},
                                                {"image", f.names(n)[t[x]]}});
          return out;
        }
        restricted.push_back(y);
      }
      actions.emplace(inj, std::move(restricted));
    }
  }
  out.coeff = InjCoeff(std::move(sets), std::move(actions));
  out.report = CheckReport::pass(name);
  return out;
}

CheckReport check_phi_iso(const TabFunctor& f, const Extraction& extraction) {
  const std::string name = "phi-iso";
  if (!extraction.coeff) return CheckReport::error(name, {{"reason", "no coefficients were extracted"}});
  const auto& a = *extraction.coeff;
  const auto w = f.window();
  if (a.window() != w) return CheckReport::error(name, {{"reason", "window mismatch"}});
  const auto tab = tabulate_cosan(a, w);

  std::vector<Table> phi(w + 1);
  for (std::size_t k = 0; k <= w; ++k) {
    std::vector<Elem> preimage(f.size(k), kAbsent);
    for (Elem i = 0; i < tab.elements[k].size(); ++i) {
      const auto& e = tab.elements[k][i];
      const auto y = f.apply(e.epi, extraction.embedding[e.level][e.coeff]);
      if (preimage[y] != kAbsent) {
        return CheckReport::fail(name, {{"kind", "injectivity"},
                                        {"level", k},
                                        {"first", to_json(a, tab.elements[k][preimage[y]])},
                                        {"second", to_json(a, e)},
                                        {"image", f.names(k)[y]}});
      }
      preimage[y] = i;
      phi[k].push_back(y);
    }
    for (Elem y = 0; y < f.size(k); ++y) {
      if (preimage[y] == kAbsent) {
        return CheckReport::fail(name, {{"kind", "surjectivity"}, {"missed", element_witness(f, k, y)}});
      }
    }
  }
  for (const auto& fun : window_functions(w)) {
    const auto& tc = tab.functor.table(fun);
    const auto& tf = f.table(fun);
    for (Elem i = 0; i < tc.size(); ++i) {
      if (phi[fun.dom()][tc[i]] != tf[phi[fun.cod()][i]]) {
        return CheckReport::fail(name, {{"kind", "naturality"},
                                        {"f", fun.literal()},
                                        {"element", to_json(a, tab.elements[fun.cod()][i])}});
      }
    }
  }
  return CheckReport::pass(name);
}

InjNat extract_nat(const InjCoeff& a_full, const InjCoeff& b_full, const TabNat& psi) {
  if (psi.components.empty()) throw Error(ErrorKind::Malformed, "transformation has no levels");
  const auto w = psi.components.size() - 1;
  if (a_full.window() < w || b_full.window() < w) {
    throw Error(ErrorKind::OutOfWindow, "coefficients do not reach the transformation's window", w);
  }
  const auto a = a_full.truncate(w);
  const auto b = b_full.truncate(w);
  const auto tab_a = tabulate_cosan(a, w);
  const auto tab_b = tabulate_cosan(b, w);
  for (std::size_t k = 0; k <= w; ++k) {
    if (psi.components[k].size() != tab_a.elements[k].size()) {
      throw Error(ErrorKind::LevelMismatch, "component does not match the source tabulation", k);
    }
    for (Elem v : psi.components[k]) {
      if (v >= tab_b.elements[k].size()) {
        throw Error(ErrorKind::LevelMismatch, "component does not land in the target tabulation", k);
      }
    }
  }

  InjNat tau{a, b, {}};
  for (std::size_t m = 0; m <= w; ++m) {
    Table component;
    for (Elem x = 0; x < a.size(m); ++x) {
      const auto i = tab_a.index_of({m, x, FinFun::identity(m)});
      const auto& image = tab_b.elements[m][psi.components[m][i]];
      const auto& p = image.epi;
      if (!is_bijective(p)) {
        throw Error(ErrorKind::NonSemicartesian, "the image of [a, id] has a non-bijective epi",
                    {{"level", m}, {"a", a.names(m)[x]}, {"p", p.literal()}});
      }
      component.push_back(act_inj(b, p, image.coeff));
    }
    tau.components.emplace_back(std::move(component));
  }

  for (std::size_t k = 0; k <= w; ++k) {
    for (Elem i = 0; i < tab_a.elements[k].size(); ++i) {
      const auto& e = tab_a.elements[k][i];
      if (tab_b.index_of(apply_nat(tau, e)) != psi.components[k][i]) {
        throw Error(ErrorKind::RoundTripMismatch, "extracted transformation disagrees with psi",
                    {{"level", k}, {"element", to_json(a, e)}});
      }
    }
  }
  return tau;
}

std::vector<std::vector<std::uint32_t>> powerset_subsets(std::size_t w) {
  const auto a = builtin_inj_coeff("powerset", w);
  std::vector<std::vector<FinFun>> coefficient(w + 1);
  for (std::size_t n = 0; n <= w; ++n) coefficient[n] = enumerate(FunKind::Inj, n, 2);
  std::vector<std::vector<std::uint32_t>> out(w + 1);
  for (std::size_t k = 0; k <= w; ++k) {
    for (const auto& e : evaluate(a, k)) {
      // Characteristic map (k] -> (2]; membership is the fiber over 1.
      const auto chi = compose(coefficient[e.level][e.coeff], e.epi);
      std::uint32_t mask = 0;
      for (std::size_t x = 1; x <= k; ++x) {
        if (chi(x) == 1) mask |= 1u << (x - 1);
      }
      out[k].push_back(mask);
    }
  }
  return out;
}

CheckReport boolean_hom_check(const TabFunctor& p, const std::vector<std::vector<std::uint32_t>>& subsets) {
  const std::string name = "boolean-hom";
  const auto w = p.window();
  std::vector<std::vector<Elem>> encode(w + 1);
  for (std::size_t k = 0; k <= w; ++k) {
    encode[k].assign(std::size_t{1} << k, kAbsent);
    if (subsets.at(k).size() != p.size(k)) return CheckReport::error(name, {{"reason", "subset listing"}, {"level", k}});
    for (Elem i = 0; i < subsets[k].size(); ++i) encode[k].at(subsets[k][i]) = i;
    for (Elem mask = 0; mask < encode[k].size(); ++mask) {
      if (encode[k][mask] == kAbsent) {
        return CheckReport::error(name, {{"reason", "level is not the full powerset"}, {"level", k}});
      }
    }
  }

  for (const auto& f : window_functions(w)) {
    const auto m = f.dom(), n = f.cod();
    const auto& t = p.table(f);
    const std::uint32_t top_n = (1u << n) - 1, top_m = (1u << m) - 1;
    auto inverse_image = [&](std::uint32_t s) {
      std::uint32_t r = 0;
      for (std::size_t x = 1; x <= m; ++x) {
        if (s >> (f(x) - 1) & 1u) r |= 1u << (x - 1);
      }
      return r;
    };
    auto pull = [&](std::uint32_t s) { return subsets[m][t[encode[n][s]]]; };
    auto fail = [&](const char* law, std::uint32_t s, std::uint32_t s2) {
      return CheckReport::fail(name, {{"law", law}, {"f", f.literal()}, {"S", s}, {"T", s2}});
    };
    if (pull(0) != 0) return fail("bottom", 0, 0);
    if (pull(top_n) != top_m) return fail("top", top_n, top_n);
    for (std::uint32_t s = 0; s <= top_n; ++s) {
      if (pull(s) != inverse_image(s)) return fail("inverse-image", s, s);
      if (pull(top_n & ~s) != (top_m & ~pull(s))) return fail("complement", s, s);
      for (std::uint32_t s2 = 0; s2 <= top_n; ++s2) {
        if (pull(s | s2) != (pull(s) | pull(s2))) return fail("union", s, s2);
        if (pull(s & s2) != (pull(s) & pull(s2))) return fail("intersection", s, s2);
      }
    }
  }
  return CheckReport::pass(name);
}

CheckReport boolean_hom_check(std::size_t w) {
  const auto tab = tabulate_cosan(builtin_inj_coeff("powerset", w), w);
  return boolean_hom_check(tab.functor, powerset_subsets(w));
}

}  // namespace cosan
