#pragma once

// The functor A |-> Check(A): elements of A_n (x)_n Epi(X,(n]) kept as
// canonical orbit representatives, the contravariant action along any
// function, transformations, and tabulation onto a window.

#include <compare>
#include <map>
#include <vector>

#include <json.hpp>

#include "cosan/coeff.hpp"
#include "cosan/finset.hpp"
#include "cosan/tabulated.hpp"

namespace cosan {

/// [a, epi] with epi:(k]->(n] in first-occurrence form and a in A_n.
struct CosanElem {
  std::size_t level = 0;
  Elem coeff = 0;
  FinFun epi;

  friend bool operator==(const CosanElem&, const CosanElem&) = default;
  friend auto operator<=>(const CosanElem&, const CosanElem&) = default;
};

/// Orbit representative of <a, x>: with x = sigma . c canonical, returns
/// [a . sigma, c]. Throws NotEpi, LevelMismatch.
CosanElem canonicalize_pair(const InjCoeff& a, Elem element, const FinFun& epi);

/// The coend normal form of [a, f] for arbitrary f:X->(n]: factor
/// f = mono . q and return the orbit of <a . mono, q>.
CosanElem normalize_general_pair(const InjCoeff& a, Elem element, const FinFun& f);

/// Check(A)((k]), ordered by (level, coefficient, epi). Throws OutOfWindow.
std::vector<CosanElem> evaluate(const InjCoeff& a, std::size_t k);

/// Check(A)(f)[a, x] for f:Y->X and [a, x] over X.
CosanElem cosan_map(const InjCoeff& a, const FinFun& f, const CosanElem& e);

/// Check(tau)[a, x] = [tau_n(a), x]. Throws IllTyped when tau_n is
/// undefined.
CosanElem apply_nat(const InjNat& tau, const CosanElem& e);

nlohmann::json to_json(const InjCoeff& a, const CosanElem& e);

struct TabulatedCosan {
  TabFunctor functor;
  std::vector<std::vector<CosanElem>> elements;
  std::vector<std::map<CosanElem, Elem>> index;

  Elem index_of(const CosanElem& e) const;
};

/// Check(A) on levels 0..w together with the element <-> index maps.
TabulatedCosan tabulate_cosan(const InjCoeff& a, std::size_t w);

/// Check(tau) between the tabulations of its source and target.
TabNat tabulate_nat(const InjNat& tau, std::size_t w);

}  // namespace cosan
