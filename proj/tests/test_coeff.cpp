#include <doctest.h>

#include <random>

#include "cosan/coeff.hpp"
#include "cosan/error.hpp"
#include "cosan/random_coeff.hpp"
#include "oracles.hpp"

using namespace cosan;

namespace {

const std::vector<std::string> kBuiltins = {"powerset", "exp:1", "exp:3", "partition", "constant"};

std::vector<InjCoeff> random_family(std::size_t count, std::size_t w, std::size_t cap, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<InjCoeff> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_inj_coeff(rng, w, cap));
  return out;
}

// B_n = {u, v} with every surjection acting trivially.
SurCoeff two_point_sur(std::size_t w, bool twist) {
  LevelNames sets(w + 1, {"u", "v"});
  std::map<FinFun, Table> actions;
  for (std::size_t n = 0; n <= w; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      for (const auto& s : enumerate(FunKind::Sur, n, m)) actions.emplace(s, Table{0, 1});
    }
  }
  if (twist) actions[FinFun(1, {1, 1})] = Table{1, 0};
  return SurCoeff::tabulated(std::move(sets), std::move(actions));
}

}  // namespace

TEST_CASE("builtin sizes") {
  CHECK(builtin_inj_coeff("powerset", 4).sizes() == std::vector<std::size_t>{1, 2, 2, 0, 0});
  CHECK(builtin_inj_coeff("exp:3", 4).sizes() == std::vector<std::size_t>{1, 3, 6, 6, 0});
  CHECK(builtin_inj_coeff("partition", 4).sizes() == std::vector<std::size_t>{1, 1, 1, 1, 1});
  CHECK(builtin_inj_coeff("constant", 4).sizes() == std::vector<std::size_t>{1, 1, 0, 0, 0});
  CHECK(builtin_inj_coeff("exp:0", 2).sizes() == std::vector<std::size_t>{1, 0, 0});
  CHECK_THROWS_AS(builtin_inj_coeff("nope", 2), Error);
  CHECK_THROWS_AS(builtin_inj_coeff("exp:x", 2), Error);
}

TEST_CASE("builtins satisfy the functor laws up to window 5") {
  for (const auto& name : kBuiltins) {
    CHECK_MESSAGE(validate_inj_coeff(builtin_inj_coeff(name, 5)).passed(), name);
  }
}

TEST_CASE("action respects composition and restricts to a right action of S_n") {
  auto family = random_family(10, 4, 3, 11);
  for (const auto& name : kBuiltins) family.push_back(builtin_inj_coeff(name, 4));
  for (const auto& a : family) {
    REQUIRE(validate_inj_coeff(a).passed());
    for (std::size_t m = 0; m <= 4; ++m) {
      for (const auto& g : injections_into(m)) {
        for (const auto& h : injections_into(g.dom())) {
          const auto f = compose(g, h);
          for (Elem x = 0; x < a.size(m); ++x) CHECK(act_inj(a, h, act_inj(a, g, x)) == act_inj(a, f, x));
        }
      }
      const auto perms = enumerate(FunKind::Bij, m, m);
      for (const auto& s : perms) {
        for (const auto& t : perms) {
          for (Elem x = 0; x < a.size(m); ++x) {
            CHECK(act_inj(a, compose(s, t), x) == act_inj(a, t, act_inj(a, s, x)));
          }
        }
      }
    }
  }
}

TEST_CASE("malformed coefficient data") {
  auto a = builtin_inj_coeff("powerset", 2);
  auto actions = a.actions();
  actions.erase(FinFun(2, {2, 1}));
  CHECK_THROWS_AS(InjCoeff(a.sets(), actions), Error);
  actions = a.actions();
  actions[FinFun(2, {2, 1})] = Table{0, 5};
  CHECK_THROWS_AS(InjCoeff(a.sets(), actions), Error);
  CHECK_THROWS_AS(a.table(FinFun(2, {1, 1})), Error);
  CHECK_THROWS_AS(a.size(3), Error);
  CHECK_THROWS_AS(act_inj(a, FinFun::identity(2), 2), Error);
}

TEST_CASE("mutated action breaks the laws") {
  const auto a = builtin_inj_coeff("powerset", 3);
  auto actions = a.actions();
  auto& t = actions.at(FinFun(2, {2, 1}));
  std::swap(t[0], t[1]);  // the swap now acts trivially
  const auto bad = InjCoeff(a.sets(), actions);
  const auto r = validate_inj_coeff(bad);
  CHECK(r.result == Verdict::Fail);
  CHECK(r.witness["law"] == "composition");

  actions = a.actions();
  actions.at(FinFun::identity(2)) = Table{1, 0};
  CHECK(validate_inj_coeff(InjCoeff(a.sets(), actions)).witness["law"] == "identity");
}

TEST_CASE("truncation") {
  const auto a = builtin_inj_coeff("exp:3", 4);
  const auto t = a.truncate(2);
  CHECK(t.window() == 2);
  CHECK(t == builtin_inj_coeff("exp:3", 2));
}

TEST_CASE("Yoneda transformations exp:1 -> exp:2") {
  const auto one = builtin_inj_coeff("exp:1", 3);
  const auto two = builtin_inj_coeff("exp:2", 3);
  // Natural maps out of a representable correspond to elements of B_1.
  const auto nats = enumerate_inj_nats(one, two, 100);
  CHECK(nats.size() == two.size(1));
  for (const auto& comps : nats) {
    InjNat tau{one, two, {}};
    for (const auto& c : comps) tau.components.emplace_back(c);
    CHECK(validate_inj_nat(tau).passed());
  }

  // A single mutated entry of the identity on exp:2 is not natural.
  auto tau = identity_nat(two);
  tau.components[1] = Table{1, 0};
  const auto r = validate_inj_nat(tau);
  CHECK(r.result == Verdict::Fail);
}

TEST_CASE("transformations with empty levels") {
  const auto empty = InjCoeff(LevelNames(3), [] {
    std::map<FinFun, Table> m;
    for (std::size_t n = 0; n <= 2; ++n) {
      for (const auto& f : injections_into(n)) m.emplace(f, Table{});
    }
    return m;
  }());
  const auto part = builtin_inj_coeff("partition", 2);
  InjNat tau{empty, part, {std::nullopt, std::nullopt, std::nullopt}};
  CHECK(validate_inj_nat(tau).passed());
  CHECK(enumerate_inj_nats(empty, part, 10).size() == 1);
  // partition -> constant has no transformation: level 2 has nowhere to go.
  CHECK(enumerate_inj_nats(part, builtin_inj_coeff("constant", 2), 10).empty());
  CHECK(validate_inj_nat(identity_nat(part)).passed());
}

TEST_CASE("isomorphism search") {
  const auto p = builtin_inj_coeff("powerset", 3);
  CHECK(find_isomorphism(p, p).has_value());
  CHECK_FALSE(find_isomorphism(p, builtin_inj_coeff("exp:3", 3)).has_value());

  // Relabel level 1 of the powerset coefficients; an isomorphism remains.
  auto sets = p.sets();
  std::swap(sets[1][0], sets[1][1]);
  std::map<FinFun, Table> actions;
  const std::vector<Elem> relabel1{1, 0};
  for (const auto& [f, t] : p.actions()) {
    Table u(t.size());
    for (Elem x = 0; x < t.size(); ++x) {
      const auto src = f.cod() == 1 ? relabel1[x] : x;
      u[x] = f.dom() == 1 ? relabel1[t[src]] : t[src];
    }
    actions.emplace(f, u);
  }
  const InjCoeff q(sets, actions);
  REQUIRE(validate_inj_coeff(q).passed());
  const auto iso = find_isomorphism(p, q);
  REQUIRE(iso.has_value());
  CHECK((*iso)[1] == Table{1, 0});
}

TEST_CASE("random coefficient functors are valid and bounded") {
  for (const auto& a : random_family(40, 3, 2, 7)) {
    CHECK(validate_inj_coeff(a).passed());
    for (auto s : a.sizes()) CHECK(s <= 2);
  }
  // Same seed, same output.
  CHECK(random_family(5, 3, 2, 99) == random_family(5, 3, 2, 99));
}

TEST_CASE("subgroups of small symmetric groups") {
  CHECK(subgroups_of(0).size() == 1);
  CHECK(subgroups_of(1).size() == 1);
  CHECK(subgroups_of(2).size() == 2);
  CHECK(subgroups_of(3).size() == 6);
  CHECK(subgroups_of(4).size() == 30);
}

TEST_CASE("surjection coefficients") {
  const auto pplus = SurCoeff::pplus();
  CHECK(pplus.size(0) == 0);
  CHECK(pplus.size(7) == 1);
  CHECK(act_sur(pplus, FinFun(2, {1, 2, 2}), 0) == 0);
  CHECK(validate_sur_coeff(pplus, 5).passed());
  CHECK(validate_sur_coeff(SurCoeff::identity(), 5).passed());
  CHECK_FALSE(pplus.window().has_value());
  try {
    act_sur(pplus, FinFun(3, {1, 2}), 0);
    FAIL("expected NotSurjective");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSurjective);
  }
  CHECK_THROWS_AS(act_sur(SurCoeff::identity(), FinFun::identity(2), 0), Error);

  const auto two = two_point_sur(3, false);
  CHECK(validate_sur_coeff(two, 3).passed());
  CHECK(validate_sur_coeff(two_point_sur(3, true), 3).result == Verdict::Fail);
  try {
    two.size(4);
    FAIL("expected LevelUnavailable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LevelUnavailable);
  }
  CHECK(builtin_sur_coeff("pplus").kind() == SurCoeff::Kind::PPlus);
  CHECK_THROWS_AS(builtin_sur_coeff("nope"), Error);
}
