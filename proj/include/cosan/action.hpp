#pragma once

// The action of semi-analytic functors on co-semi-analytic ones by
// composition: H(X) = F_B(Check(A)(X)), tabulated and certified.

#include "cosan/coeff.hpp"
#include "cosan/report.hpp"
#include "cosan/tabulated.hpp"
#include "cosan/verify.hpp"

namespace cosan {

inline constexpr std::size_t kDefaultLevelCap = 10'000;

/// H_k = F_B(Check(A)((k])) and H(f) = F_B(Check(A)(f)) for k, f inside
/// the window. Throws ResourceBound when some H_k would exceed cap.
TabFunctor compose_tabulate(const SurCoeff& b, const InjCoeff& a, std::size_t w,
                            std::size_t cap = kDefaultLevelCap);

struct ComposeResult {
  TabFunctor composite;
  Extraction extraction;
  CheckReport phi;
};

/// Extracts coefficients of the composite and checks phi against it.
ComposeResult compose_extract(const SurCoeff& b, const InjCoeff& a, std::size_t w,
                              std::size_t cap = kDefaultLevelCap);

}  // namespace cosan
