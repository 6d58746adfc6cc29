#include <doctest.h>

#include <random>

#include "cosan/error.hpp"
#include "cosan/random_coeff.hpp"
#include "cosan/verify.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace cosan;

namespace {

TabFunctor tab(const std::string& name, std::size_t w) { return tabulate_cosan(builtin_inj_coeff(name, w), w).functor; }

bool mentions(const nlohmann::json& j, const std::string& text) { return j.dump().find(text) != std::string::npos; }

using Sizes = std::vector<std::size_t>;

}  // namespace

TEST_CASE("functor validation") {
  const auto p = tab("powerset", 3);
  CHECK(validate_tab_functor(p).passed());
  CHECK(validate_tab_functor(tab("partition", 0)).passed());
  const auto bad = fixture::mutate(p, FinFun(2, {1, 1, 2}), 0, 1);
  const auto r = validate_tab_functor(bad);
  CHECK(r.result == Verdict::Fail);
  CHECK(r.witness.contains("f"));
  CHECK(validate_tab_functor(fixture::relations(2)).passed());
  CHECK(validate_tab_functor(fixture::phantom_powerset(3)).passed());
}

TEST_CASE("tab functor construction") {
  const auto p = tab("powerset", 2);
  auto tables = p.tables();
  tables.erase(FinFun(2, {1, 1}));
  CHECK_THROWS_AS(TabFunctor(p.sets(), tables), Error);
  CHECK(p.map(FinFun::identity(2)) == FinFun::identity(4));
  CHECK(window_functions(2).size() == 3 + 3 + 5);
}

TEST_CASE("pullback preservation") {
  CHECK(check_pullback_preservation(tab("powerset", 3)).passed());
  CHECK(check_pullback_preservation(tab("partition", 3)).passed());
  CHECK(check_pullback_preservation(tab("exp:3", 3)).passed());
  const auto r = check_pullback_preservation(fixture::relations(3));
  CHECK(r.result == Verdict::Fail);
  CHECK(r.witness.contains("square"));
  CHECK(r.witness.contains("epi"));

  // The top-level phantom is not pulled back from (2] along (3] ->> (2].
  const auto phantom = check_pullback_preservation(fixture::phantom_powerset(3));
  CHECK(phantom.result == Verdict::Fail);
  CHECK(phantom.witness["square"]["kind"] == "missed");
  // At window 2 both are indistinguishable from co-semi-analytic functors.
  CHECK(check_pullback_preservation(fixture::phantom_powerset(2)).passed());
  CHECK(check_pullback_preservation(fixture::relations(2)).passed());
}

TEST_CASE("canonical cocone") {
  CHECK(check_cocone_colimit(tab("powerset", 4), 3).passed());
  CHECK(check_cocone_colimit(tab("partition", 4), 4).passed());
  for (std::size_t k = 0; k <= 3; ++k) CHECK(check_cocone_colimit(tab("exp:3", 3), k).passed());

  // Neither functorial non-example breaks the cocone condition; both are
  // caught by the pullback condition instead.
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK(check_cocone_colimit(fixture::phantom_powerset(3), k).passed());
    CHECK(check_cocone_colimit(fixture::relations(3), k).passed());
  }

  CHECK(check_cocone_colimit(tab("powerset", 2), 3).result == Verdict::Error);
  // The relation functor misses elements of F_2 from smaller levels.
  CHECK(check_cocone_colimit(fixture::relations(2), 2).passed());
}

TEST_CASE("semicartesian transformations") {
  const auto yoneda = tabulate_nat(fixture::yoneda(3), 3);
  CHECK(check_naturality(yoneda).passed());
  CHECK(check_semicartesian(yoneda).passed());
  CHECK(check_semicartesian(tabulate_nat(identity_nat(builtin_inj_coeff("partition", 3)), 3)).passed());

  const auto collapse = fixture::collapse_to_constant(3);
  CHECK(check_naturality(collapse).passed());
  const auto r = check_semicartesian(collapse);
  CHECK(r.result == Verdict::Fail);
  CHECK(r.witness["g"] == "2>1:1,1");

  auto broken = yoneda;
  broken.components[2][0] = (broken.components[2][0] + 1) % broken.target.size(2);
  CHECK(check_naturality(broken).result == Verdict::Fail);
  CHECK(check_semicartesian(broken).result == Verdict::Error);
}

TEST_CASE("coefficient extraction") {
  auto e = extract_coefficients(tab("powerset", 4));
  REQUIRE(e.coeff);
  CHECK(e.report.passed());
  CHECK(e.coeff->sizes() == Sizes{1, 2, 2, 0, 0});
  CHECK(find_isomorphism(*e.coeff, builtin_inj_coeff("powerset", 4)).has_value());

  e = extract_coefficients(tab("constant", 4));
  CHECK(e.coeff->sizes() == Sizes{1, 1, 0, 0, 0});
  e = extract_coefficients(tab("partition", 4));
  CHECK(e.coeff->sizes() == Sizes{1, 1, 1, 1, 1});

  for (const auto& f : {tab("powerset", 4), tab("exp:3", 3), fixture::relations(2), fixture::phantom_powerset(2)}) {
    e = extract_coefficients(f);
    REQUIRE(e.coeff);
    CHECK(e.report.passed());
    CHECK(e.coeff->sizes() == oracle::extraction_sizes(f));
    CHECK(validate_inj_coeff(*e.coeff).passed());
  }

  // Restriction escapes the coefficients once the pullback condition fails.
  e = extract_coefficients(fixture::relations(3));
  CHECK_FALSE(e.coeff);
  CHECK(e.report.result == Verdict::Fail);
  CHECK(e.report.witness["kind"] == "WellDefinednessFailure");
  CHECK(extract_coefficients(fixture::phantom_powerset(3)).report.result == Verdict::Fail);
}

TEST_CASE("phi") {
  for (const auto* name : {"powerset", "partition", "exp:3", "constant"}) {
    const auto f = tab(name, 3);
    CHECK_MESSAGE(check_phi_iso(f, extract_coefficients(f)).passed(), name);
  }
  // At window 2 the phantom is a genuine extra coefficient.
  const auto small = fixture::phantom_powerset(2);
  const auto grown = extract_coefficients(small);
  CHECK(grown.coeff->sizes() == Sizes{1, 2, 3});
  CHECK(check_phi_iso(small, grown).passed());

  // Against the coefficients of the unmutated powerset, phi misses it.
  const auto phantom = fixture::phantom_powerset(3);
  const auto r = check_phi_iso(phantom, extract_coefficients(tab("powerset", 3)));
  CHECK(r.result == Verdict::Fail);
  CHECK(r.witness["kind"] == "surjectivity");
  CHECK(r.witness["missed"]["element"] == "phantom");

  const auto rel = fixture::relations(2);
  CHECK(check_phi_iso(rel, extract_coefficients(rel)).passed());
  CHECK(check_phi_iso(rel, Extraction{}).result == Verdict::Error);
}

TEST_CASE("transformation extraction") {
  const auto tau = fixture::yoneda(3);
  const auto back = extract_nat(tau.source, tau.target, tabulate_nat(tau, 3));
  for (std::size_t n = 0; n <= 3; ++n) {
    if (tau.source.size(n) > 0) CHECK(*back.components[n] == *tau.components[n]);
  }

  const auto part = builtin_inj_coeff("partition", 3);
  const auto id = extract_nat(part, part, tabulate_nat(identity_nat(part), 3));
  for (std::size_t n = 0; n <= 3; ++n) CHECK(*id.components[n] == Table{0});

  try {
    extract_nat(builtin_inj_coeff("powerset", 3), builtin_inj_coeff("constant", 3), fixture::collapse_to_constant(3));
    FAIL("expected NonSemicartesian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonSemicartesian);
    CHECK(e.witness()["level"] == 2);
    CHECK(e.witness()["p"] == "2>1:1,1");
  }

  // A natural psi that disagrees with Check(tau) away from [a, id].
  auto twisted = tabulate_nat(identity_nat(builtin_inj_coeff("powerset", 2)), 2);
  CHECK_THROWS_AS(extract_nat(builtin_inj_coeff("powerset", 2), builtin_inj_coeff("exp:3", 2), twisted), Error);
}

TEST_CASE("round trips on random coefficient functors") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto a = random_inj_coeff(rng, 3, 2);
    const auto f = tabulate_cosan(a, 3).functor;
    const auto e = extract_coefficients(f);
    REQUIRE(e.coeff);
    CHECK(find_isomorphism(*e.coeff, a).has_value());
    CHECK(check_phi_iso(f, e).passed());
    CHECK(check_pullback_preservation(f).passed());
    if (const auto tau = random_inj_nat(rng, a, a)) {
      const auto psi = tabulate_nat(*tau, 3);
      CHECK(check_semicartesian(psi).passed());
      const auto back = extract_nat(a, a, psi);
      for (std::size_t n = 0; n <= 3; ++n) {
        if (a.size(n) > 0) CHECK(*back.components[n] == *tau->components[n]);
      }
    }
  }
}

TEST_CASE("inverse image is a Boolean homomorphism") {
  CHECK(boolean_hom_check(3).passed());
  const auto p = tab("powerset", 3);
  const auto subsets = powerset_subsets(3);
  for (std::size_t k = 0; k <= 3; ++k) {
    std::set<std::uint32_t> distinct(subsets[k].begin(), subsets[k].end());
    CHECK(distinct.size() == (1u << k));
  }
  const FinFun fold(1, {1, 1});
  const auto& t = p.table(fold);
  for (Elem s = 0; s < 2; ++s) CHECK(subsets[2][t[s]] == oracle::inverse_image(fold, subsets[1][s]));

  const auto bad = fixture::mutate(p, FinFun(3, {1, 2}), 0, p.table(FinFun(3, {1, 2}))[0] ^ 1);
  CHECK(boolean_hom_check(bad, subsets).result == Verdict::Fail);
}
