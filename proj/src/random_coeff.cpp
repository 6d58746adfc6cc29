#include "cosan/random_coeff.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "union_find.hpp"

namespace cosan {

const std::vector<std::vector<FinFun>>& subgroups_of(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::vector<FinFun>>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const auto perms = enumerate(FunKind::Bij, n, n);
  std::set<std::vector<FinFun>> found;
  // Every subgroup of S_n for n <= 4 is generated by two elements.
  for (const auto& p : perms) {
    for (const auto& q : perms) {
      std::set<FinFun> group{FinFun::identity(n)};
      std::vector<FinFun> frontier{FinFun::identity(n)};
      while (!frontier.empty()) {
        auto g = frontier.back();
        frontier.pop_back();
        for (const auto* gen : {&p, &q}) {
          auto h = compose(*gen, g);
          if (group.insert(h).second) frontier.push_back(std::move(h));
        }
      }
      found.emplace(group.begin(), group.end());
    }
  }
  return cache.emplace(n, std::vector<std::vector<FinFun>>(found.begin(), found.end())).first->second;
}

namespace {

// Orbits of Inj((m],(n]) under i |-> h . i, h in H, for each level m <= w.
struct OrbitSummand {
  std::vector<std::vector<FinFun>> reps;      // per level
  std::vector<std::map<FinFun, Elem>> orbit;  // injection -> orbit index
};

OrbitSummand orbit_summand(std::size_t n, const std::vector<FinFun>& group, std::size_t w) {
  OrbitSummand s;
  s.reps.resize(w + 1);
  s.orbit.resize(w + 1);
  for (std::size_t m = 0; m <= w; ++m) {
    for (const auto& i : enumerate(FunKind::Inj, m, n)) {
      if (s.orbit[m].contains(i)) continue;
      const auto idx = s.reps[m].size();
      s.reps[m].push_back(i);
      for (const auto& h : group) s.orbit[m].emplace(compose(h, i), idx);
    }
  }
  return s;
}

}  // namespace

InjCoeff random_inj_coeff(std::mt19937_64& rng, std::size_t w, std::size_t cap) {
  std::vector<OrbitSummand> summands;
  std::vector<std::size_t> sizes(w + 1, 0);
  const auto wanted = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  for (std::size_t attempt = 0; attempt < 12 && summands.size() < wanted; ++attempt) {
    const auto n = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(w, 4))(rng);
    const auto& groups = subgroups_of(n);
    const auto& group = groups[std::uniform_int_distribution<std::size_t>(0, groups.size() - 1)(rng)];
    auto s = orbit_summand(n, group, w);
    bool fits = true;
    for (std::size_t m = 0; m <= w; ++m) fits = fits && sizes[m] + s.reps[m].size() <= cap;
    if (!fits) continue;
    for (std::size_t m = 0; m <= w; ++m) sizes[m] += s.reps[m].size();
    summands.push_back(std::move(s));
  }

  // Global numbering: level offsets, then summand by summand.
  std::vector<std::size_t> offset(w + 2, 0);
  for (std::size_t m = 0; m <= w; ++m) offset[m + 1] = offset[m] + sizes[m];
  LevelNames names(w + 1);
  std::vector<std::vector<std::pair<std::size_t, Elem>>> origin(w + 1);
  for (std::size_t si = 0; si < summands.size(); ++si) {
    for (std::size_t m = 0; m <= w; ++m) {
      for (Elem r = 0; r < summands[si].reps[m].size(); ++r) {
        names[m].push_back("g" + std::to_string(si) + "." + std::to_string(r));
        origin[m].emplace_back(si, r);
      }
    }
  }
  std::vector<std::vector<Elem>> first_of_summand(summands.size(), std::vector<Elem>(w + 1, 0));
  for (std::size_t m = 0; m <= w; ++m) {
    for (Elem x = origin[m].size(); x-- > 0;) first_of_summand[origin[m][x].first][m] = x;
  }
  auto act = [&](const FinFun& f, Elem x) -> Elem {
    const auto m = f.cod();
    const auto [si, r] = origin[m][x];
    const auto& s = summands[si];
    return first_of_summand[si][f.dom()] + s.orbit[f.dom()].at(compose(s.reps[m][r], f));
  };
  auto free = make_inj_coeff(names, act);

  if (std::bernoulli_distribution(0.5)(rng)) {
    std::vector<std::size_t> glueable;
    for (std::size_t m = 0; m <= w; ++m) {
      if (sizes[m] >= 2) glueable.push_back(m);
    }
    if (!glueable.empty()) {
      const auto j = glueable[std::uniform_int_distribution<std::size_t>(0, glueable.size() - 1)(rng)];
      std::uniform_int_distribution<Elem> pick(0, sizes[j] - 1);
      const auto x = pick(rng);
      auto y = pick(rng);
      if (y == x) y = (x + 1) % sizes[j];

      // Congruence closure: x ~ y forces x.f ~ y.f for every injection f.
      detail::DisjointSets classes(offset[w + 1]);
      std::vector<std::tuple<std::size_t, Elem, Elem>> work{{j, x, y}};
      while (!work.empty()) {
        auto [m, p, q] = work.back();
        work.pop_back();
        if (!classes.unite(offset[m] + p, offset[m] + q)) continue;
        for (const auto& f : injections_into(m)) {
          work.emplace_back(f.dom(), act_inj(free, f, p), act_inj(free, f, q));
        }
      }
      LevelNames glued(w + 1);
      std::vector<std::vector<Elem>> class_index(w + 1);
      std::vector<std::map<std::size_t, Elem>> root_index(w + 1);
      for (std::size_t m = 0; m <= w; ++m) {
        for (Elem p = 0; p < sizes[m]; ++p) {
          const auto root = classes.find(offset[m] + p);
          auto [it, fresh] = root_index[m].emplace(root, glued[m].size());
          if (fresh) glued[m].push_back(names[m][p]);
          class_index[m].push_back(it->second);
        }
      }
      std::vector<std::vector<Elem>> representative(w + 1);
      for (std::size_t m = 0; m <= w; ++m) {
        representative[m].resize(glued[m].size());
        for (Elem p = sizes[m]; p-- > 0;) representative[m][class_index[m][p]] = p;
      }
      return make_inj_coeff(std::move(glued), [&](const FinFun& f, Elem c) {
        return class_index[f.dom()][act_inj(free, f, representative[f.cod()][c])];
      });
    }
  }
  return free;
}

std::optional<InjNat> random_inj_nat(std::mt19937_64& rng, const InjCoeff& a, const InjCoeff& b) {
  auto all = enumerate_inj_nats(a, b, 256);
  if (all.empty()) return std::nullopt;
  auto& chosen = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
  InjNat tau{a, b, {}};
  for (auto& t : chosen) tau.components.emplace_back(std::move(t));
  return tau;
}

}  // namespace cosan
