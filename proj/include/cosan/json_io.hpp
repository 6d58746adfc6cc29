#pragma once

// JSON documents for coefficient functors, tabulated functors and
// transformations, plus loaders that accept "builtin:NAME" in place of a
// file path. Tables are written 1-based; parse failures throw Malformed.

#include <string>

#include <json.hpp>

#include "cosan/coeff.hpp"
#include "cosan/san.hpp"
#include "cosan/tabulated.hpp"

namespace cosan {

using nlohmann::json;

json inj_coeff_to_json(const InjCoeff& a);
InjCoeff inj_coeff_from_json(const json& j);

/// Rule variants are written as {"kind":"sur-coeff","rule":NAME}.
json sur_coeff_to_json(const SurCoeff& b);
SurCoeff sur_coeff_from_json(const json& j);

json tab_functor_to_json(const TabFunctor& f);
TabFunctor tab_functor_from_json(const json& j);

/// Embeds source and target so the document stands on its own.
json tab_nat_to_json(const TabNat& psi);
/// Source and target come from the document when present, else from the
/// arguments.
TabNat tab_nat_from_json(const json& j, const TabFunctor* source, const TabFunctor* target);

json inj_nat_to_json(const InjNat& tau);
InjNat inj_nat_from_json(const json& j, const InjCoeff& source, const InjCoeff& target);

json algebra_to_json(const Algebra& alg);
Algebra algebra_from_json(const json& j);

json read_json_file(const std::string& path);

/// "builtin:NAME" or a path to an inj-coeff document.
InjCoeff load_inj_coeff(const std::string& ref, std::size_t window);
/// "builtin:pplus", "builtin:identity" or a path to a sur-coeff document.
SurCoeff load_sur_coeff(const std::string& ref);
/// "builtin:NAME" tabulates the builtin coefficient functor at the window;
/// otherwise a path to a tab-functor document.
TabFunctor load_tab_functor(const std::string& ref, std::size_t window);
/// "max:n" or a path to an algebra document.
Algebra load_algebra(const std::string& ref);

}  // namespace cosan
