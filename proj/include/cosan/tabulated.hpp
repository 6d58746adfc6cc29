#pragma once

#include <map>
#include <string>
#include <vector>

#include "cosan/coeff.hpp"
#include "cosan/finset.hpp"

namespace cosan {

/// A contravariant functor on finite sets, tabulated on (0],...,(W]: for
/// every function f:(m]->(n] inside the window, a table F_n -> F_m.
class TabFunctor {
 public:
  TabFunctor() = default;

  /// Throws Malformed if some window function lacks a total table.
  TabFunctor(LevelNames sets, std::map<FinFun, Table> tables);

  std::size_t window() const noexcept { return sets_.size() - 1; }
  std::size_t size(std::size_t n) const { return sets_.at(n).size(); }
  std::vector<std::size_t> sizes() const;
  const std::vector<std::string>& names(std::size_t n) const { return sets_.at(n); }
  const LevelNames& sets() const noexcept { return sets_; }
  const std::map<FinFun, Table>& tables() const noexcept { return tables_; }

  /// F(f) as an index table F_{f.cod} -> F_{f.dom}.
  const Table& table(const FinFun& f) const;

  /// F(f) as a function between the finite sets (|F_n|] -> (|F_m|].
  FinFun map(const FinFun& f) const;

  Elem apply(const FinFun& f, Elem x) const { return table(f).at(x); }

 private:
  LevelNames sets_{{}};
  std::map<FinFun, Table> tables_;
};

/// A levelwise family psi_k : F_k -> G_k between two tabulated functors.
struct TabNat {
  TabFunctor source;
  TabFunctor target;
  std::vector<Table> components;
};

/// Every function (m]->(n] with m, n <= w, ordered by (m, n, values).
std::vector<FinFun> window_functions(std::size_t w, FunKind kind = FunKind::All);

}  // namespace cosan
