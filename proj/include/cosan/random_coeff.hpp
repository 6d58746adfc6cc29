#pragma once

#include <optional>
#include <random>

#include "cosan/coeff.hpp"

namespace cosan {

/// A random coefficient functor on levels 0..w with every |A_n| <= cap.
/// Built by free completion: a coproduct of orbit sets H\Inj(-,(n]) for
/// random subgroups H of S_n, optionally glued along the congruence
/// generated by one random pair. Functorial by construction.
InjCoeff random_inj_coeff(std::mt19937_64& rng, std::size_t w, std::size_t cap);

/// A uniformly chosen natural transformation A -> B among the first few
/// hundred found, or nullopt when there is none.
std::optional<InjNat> random_inj_nat(std::mt19937_64& rng, const InjCoeff& a, const InjCoeff& b);

/// Every subgroup of S_n, each listed as its sorted elements.
const std::vector<std::vector<FinFun>>& subgroups_of(std::size_t n);

}  // namespace cosan
