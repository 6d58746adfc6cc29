#pragma once

// Coefficient functors. InjCoeff is a functor I^op -> Set truncated at a
// window W: sets A_0..A_W and, for every injection f:(n]->(m] inside the
// window, the table of a |-> a.f from A_m to A_n. SurCoeff is a covariant
// functor on surjections, tabulated or produced by a named rule.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cosan/finset.hpp"
#include "cosan/report.hpp"

namespace cosan {

using Elem = std::size_t;  // 0-based index into a level set
using Table = std::vector<Elem>;
using LevelNames = std::vector<std::vector<std::string>>;

class InjCoeff {
 public:
  InjCoeff() = default;

  /// sets.size() == W + 1. Every injection inside the window must have a
  /// total table of the right shape, else Malformed. The functor laws are
  /// not checked here; see validate_inj_coeff.
  InjCoeff(LevelNames sets, std::map<FinFun, Table> actions);

  std::size_t window() const noexcept { return sets_.size() - 1; }
  std::size_t size(std::size_t n) const;
  std::vector<std::size_t> sizes() const;
  const std::vector<std::string>& names(std::size_t n) const;
  const LevelNames& sets() const noexcept { return sets_; }
  const std::map<FinFun, Table>& actions() const noexcept { return actions_; }

  /// Table A_m -> A_n of an injection f:(n]->(m]. Throws NotInjective or
  /// OutOfWindow.
  const Table& table(const FinFun& f) const;

  /// The same coefficient functor restricted to levels 0..w.
  InjCoeff truncate(std::size_t w) const;

  friend bool operator==(const InjCoeff&, const InjCoeff&) = default;

 private:
  LevelNames sets_{{}};
  std::map<FinFun, Table> actions_;
};

/// a . f for an injection f:(n]->(m] and a in A_m.
Elem act_inj(const InjCoeff& a, const FinFun& f, Elem element);

/// Identity and contravariant composition laws over every injection pair
/// in the window; the witness names the first violating pair.
CheckReport validate_inj_coeff(const InjCoeff& a);

/// "powerset", "partition", "constant" or "exp:n".
InjCoeff builtin_inj_coeff(const std::string& name, std::size_t window);

/// Tabulates a coefficient functor from level sets and an action rule.
template <class Action>
InjCoeff make_inj_coeff(LevelNames sets, Action&& act);

/// A levelwise family tau_n : A_n -> B_n. A level may be left undefined,
/// which is only legal when A_n is empty.
struct InjNat {
  InjCoeff source;
  InjCoeff target;
  std::vector<std::optional<Table>> components;
};

CheckReport validate_inj_nat(const InjNat& tau);

InjNat identity_nat(const InjCoeff& a);

/// All natural transformations A -> B (at most limit of them), found by
/// backtracking from the top level down.
std::vector<std::vector<Table>> enumerate_inj_nats(const InjCoeff& a, const InjCoeff& b,
                                                   std::size_t limit);

/// A levelwise bijection commuting with every injection action, if any.
std::optional<std::vector<Table>> find_isomorphism(const InjCoeff& a, const InjCoeff& b);

/// Injections (j]->(n] for every j <= n, cached per n.
const std::vector<FinFun>& injections_into(std::size_t n);

class SurCoeff {
 public:
  enum class Kind { Tabulated, PPlus, Identity };

  /// Tabulated coefficients on levels 0..W, one table B_n -> B_m per
  /// surjection (n]->(m].
  static SurCoeff tabulated(LevelNames sets, std::map<FinFun, Table> actions);
  /// Nonempty finite powerset: B_n = {*} for n >= 1, B_0 empty.
  static SurCoeff pplus();
  /// Identity functor: B_1 = {*}, every other level empty.
  static SurCoeff identity();

  Kind kind() const noexcept { return kind_; }
  std::string name() const;

  /// Highest materializable level, or nullopt for the unbounded rules.
  std::optional<std::size_t> window() const;

  /// |B_n|; throws LevelUnavailable beyond the window.
  std::size_t size(std::size_t n) const;
  std::string element_name(std::size_t n, Elem b) const;

  /// Image of b in B_m under a surjection s:(n]->(m].
  Elem act(const FinFun& s, Elem b) const;

  /// The full table of a surjection, memoized for rule variants.
  const Table& table(const FinFun& s) const;

 private:
  struct Memo;

  Kind kind_ = Kind::Tabulated;
  LevelNames sets_;
  std::map<FinFun, Table> actions_;
  std::shared_ptr<Memo> memo_;
};

Elem act_sur(const SurCoeff& b, const FinFun& s, Elem element);

/// "pplus" or "identity".
SurCoeff builtin_sur_coeff(const std::string& name);

/// Identity and covariant composition laws over surjections up to level.
CheckReport validate_sur_coeff(const SurCoeff& b, std::size_t up_to_level);

// ---------------------------------------------------------------------------

template <class Action>
InjCoeff make_inj_coeff(LevelNames sets, Action&& act) {
  const auto w = sets.size() - 1;
  std::map<FinFun, Table> actions;
  for (std::size_t m = 0; m <= w; ++m) {
    for (const auto& f : injections_into(m)) {
      Table t(sets[m].size());
      for (Elem a = 0; a < t.size(); ++a) t[a] = act(f, a);
      actions.emplace(f, std::move(t));
    }
  }
  return InjCoeff(std::move(sets), std::move(actions));
}

}  // namespace cosan
