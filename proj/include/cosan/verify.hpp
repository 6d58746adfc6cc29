#pragma once

// Oracles on tabulated contravariant functors: functor laws, the two image
// conditions (pullbacks along monos in Set^op, canonical finitary cocones),
// semicartesian transformations, extraction of coefficients and of
// transformations, and the comparison map phi.

#include <optional>
#include <vector>

#include "cosan/coeff.hpp"
#include "cosan/report.hpp"
#include "cosan/tabulated.hpp"

namespace cosan {

CheckReport validate_tab_functor(const TabFunctor& f);

/// For every epi e:Z->X and every g:Z->Y in the window, F must send the
/// pushout square of (e, g) to a pullback.
CheckReport check_pullback_preservation(const TabFunctor& f);

/// The quotient of sum_n F_n x Fun((k],(n]) (n <= W) by the relation
/// generated by (h, F(g)(c)) ~ (g . h, c) must map bijectively onto F_k.
CheckReport check_cocone_colimit(const TabFunctor& f, std::size_t k);

CheckReport check_naturality(const TabNat& psi);

/// Naturality squares at every window surjection must be pullbacks.
/// Reports an error (not a failure) when psi is not natural.
CheckReport check_semicartesian(const TabNat& psi);

struct Extraction {
  std::optional<InjCoeff> coeff;   // empty on a well-definedness failure
  std::vector<Table> embedding;    // A_n element i sits at F_n[embedding[n][i]]
  CheckReport report;
};

/// A_n = F_n minus the images of F(h) over proper surjections h:(n]->(m],
/// m < n; injections act by restricting F.
Extraction extract_coefficients(const TabFunctor& f);

/// phi[a, x] = F(x)(a) must be a natural bijection Check(A) -> F.
CheckReport check_phi_iso(const TabFunctor& f, const Extraction& extraction);

/// Reads tau off psi at the elements [a, id]. Throws NonSemicartesian when
/// such an element lands on [b, p] with p not a bijection, and
/// RoundTripMismatch when Check(tau) differs from psi somewhere.
InjNat extract_nat(const InjCoeff& a, const InjCoeff& b, const TabNat& psi);

/// Subset of (k] carried by each element of the tabulated powerset, as a
/// bitmask (bit x-1 set when x is in the subset).
std::vector<std::vector<std::uint32_t>> powerset_subsets(std::size_t w);

/// Inverse image along every window function preserves union,
/// intersection, complement, bottom and top; the tables are also compared
/// against f^-1 computed on the subsets directly.
CheckReport boolean_hom_check(const TabFunctor& powerset, const std::vector<std::vector<std::uint32_t>>& subsets);
CheckReport boolean_hom_check(std::size_t w);

}  // namespace cosan
