#pragma once

// Test-side oracles, written without the library's canonical forms so the
// library can be checked against them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "cosan/coeff.hpp"
#include "cosan/tabulated.hpp"

namespace oracle {

using cosan::FinFun;

// S(k, n) from S(k, n) = n S(k-1, n) + S(k-1, n-1).
inline std::uint64_t stirling2(std::size_t k, std::size_t n) {
  std::vector<std::vector<std::uint64_t>> s(k + 1, std::vector<std::uint64_t>(std::max(k, n) + 1, 0));
  s[0][0] = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  }
  return n <= k ? s[k][n] : 0;
}

inline std::uint64_t bell(std::size_t k) {
  std::uint64_t sum = 0;
  for (std::size_t n = 0; n <= k; ++n) sum += stirling2(k, n);
  return sum;
}

inline std::uint64_t binomial(std::size_t k, std::size_t n) {
  if (n > k) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= n; ++i) r = r * (k - n + i) / i;
  return r;
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

// Every value sequence of length m over 1..n, by odometer.
inline std::vector<std::vector<cosan::Point>> all_sequences(std::size_t m, std::size_t n) {
  std::vector<std::vector<cosan::Point>> out;
  if (m > 0 && n == 0) return out;
  std::vector<cosan::Point> v(m, 1);
  while (true) {
    out.push_back(v);
    std::size_t i = m;
    while (i > 0 && v[i - 1] == n) v[--i] = 1;
    if (i == 0) return out;
    ++v[i - 1];
  }
}

inline bool onto(const std::vector<cosan::Point>& v, std::size_t n) {
  std::set<cosan::Point> seen(v.begin(), v.end());
  return seen.size() == n;
}

inline std::vector<FinFun> surjections(std::size_t m, std::size_t n) {
  std::vector<FinFun> out;
  for (auto& v : all_sequences(m, n)) {
    if (onto(v, n)) out.emplace_back(n, v);
  }
  return out;
}

inline std::vector<FinFun> permutations(std::size_t n) { return surjections(n, n); }

inline std::size_t find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// |Check(A)((k])| by listing every raw pair <a, x> with x:(k]->>(n] and
// merging <a, sigma . x> with <a . sigma, x> for every sigma in S_n.
inline std::size_t orbit_quotient_size(const cosan::InjCoeff& a, std::size_t k) {
  std::map<std::tuple<std::size_t, cosan::Elem, FinFun>, std::size_t> id;
  for (std::size_t n = 0; n <= k; ++n) {
    for (const auto& x : surjections(k, n)) {
      for (cosan::Elem e = 0; e < a.size(n); ++e) id.emplace(std::tuple{n, e, x}, id.size());
    }
  }
  std::vector<std::size_t> parent(id.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& [key, i] : id) {
    (void)i;
    const auto& [n, e, x] = key;
    for (const auto& sigma : permutations(n)) {
      std::vector<cosan::Point> moved;
      for (auto v : x.values()) moved.push_back(sigma(v));
      const auto lhs = id.at({n, e, FinFun(n, moved)});
      const auto rhs = id.at({n, a.table(sigma)[e], x});
      parent[find(parent, lhs)] = find(parent, rhs);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(parent, i));
  return roots.size();
}

// |F_n| minus the union of images of F(h) over surjections h:(n]->(m],
// m < n, computed straight from the tables.
inline std::vector<std::size_t> extraction_sizes(const cosan::TabFunctor& f) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= f.window(); ++n) {
    std::set<cosan::Elem> hit;
    for (std::size_t m = 0; m < n; ++m) {
      for (const auto& h : surjections(n, m)) {
        for (auto x : f.table(h)) hit.insert(x);
      }
    }
    out.push_back(f.size(n) - hit.size());
  }
  return out;
}

// Subsets of (k] as bitmasks; direct and inverse image along f.
inline std::uint32_t direct_image(const FinFun& f, std::uint32_t subset) {
  std::uint32_t out = 0;
  for (std::size_t i = 1; i <= f.dom(); ++i) {
    if (subset >> (i - 1) & 1u) out |= 1u << (f(i) - 1);
  }
  return out;
}

inline std::uint32_t inverse_image(const FinFun& f, std::uint32_t subset) {
  std::uint32_t out = 0;
  for (std::size_t i = 1; i <= f.dom(); ++i) {
    if (subset >> (f(i) - 1) & 1u) out |= 1u << (i - 1);
  }
  return out;
}

}  // namespace oracle
