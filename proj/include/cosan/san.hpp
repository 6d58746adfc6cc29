#pragma once

// Semi-analytic functors F_B(X) = sum_n B_n (x)_n Mono((n],X), their
// covariant action, the strength st(x,t) = T(xbar)(t), and the algebra
// structures on (n]^X built from an algebra on (n].

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "cosan/coeff.hpp"
#include "cosan/finset.hpp"
#include "cosan/report.hpp"

namespace cosan {

/// [b, mono] with mono:(n]->X strictly ascending and b in B_n.
struct SanElem {
  std::size_t level = 0;
  Elem coeff = 0;
  FinFun mono;

  friend bool operator==(const SanElem&, const SanElem&) = default;
  friend auto operator<=>(const SanElem&, const SanElem&) = default;
};

/// Orbit representative of <b, i> for any injection i: with
/// i = ascending . pi, returns [B(pi)(b), ascending].
SanElem canonical_san(const SurCoeff& b, Elem element, const FinFun& mono);

/// sum_n |B_n| * C(k, n), saturating at SIZE_MAX.
std::size_t san_size(const SurCoeff& b, std::size_t k);

/// F_B((k]) ordered by (level, coefficient, mono). Throws LevelUnavailable.
std::vector<SanElem> san_evaluate(const SurCoeff& b, std::size_t k);

/// F_B(f)[b, i] = [B(s)(b), i'] where f . i = i' . s.
SanElem san_map(const SurCoeff& b, const FinFun& f, const SanElem& e);

/// Index lookup over one san_evaluate listing.
class SanIndex {
 public:
  explicit SanIndex(std::vector<SanElem> elements);
  const std::vector<SanElem>& elements() const noexcept { return elements_; }
  Elem index_of(const SanElem& e) const;

 private:
  std::vector<SanElem> elements_;
  std::map<SanElem, Elem> index_;
};

/// The pair (x, y) of (X] x (Y] sits at (x-1)*Y + y in (X*Y].
Point product_index(std::size_t y_size, Point x, Point y);

/// xbar:(Y]->(X*Y], y |-> (x, y).
FinFun pairing(std::size_t x_size, std::size_t y_size, Point x);

/// st_{X,Y}(x, t) = T(xbar)(t). Throws IndexOutOfRange.
SanElem strength(const SurCoeff& b, std::size_t x_size, std::size_t y_size, Point x, const SanElem& t);

using StrengthFn = std::function<SanElem(const SurCoeff&, std::size_t, std::size_t, Point, const SanElem&)>;

/// For all monos u:(X']->(X], v:(Y']->(Y] with X, Y <= w, checks the
/// naturality square of the strength at (u, v) is a pullback. Parts report
/// the first variable alone (v = id), the second alone (u = id), and both.
CheckReport check_strength_semicartesian(const SurCoeff& b, std::size_t w, const StrengthFn& st = strength);

/// alpha: F_B((n]) -> (n], one value per element in evaluation order.
struct Algebra {
  std::size_t carrier = 0;
  std::vector<Point> alpha;
};

/// ((n], max) as an algebra for the nonempty-powerset monad.
Algebra max_algebra(std::size_t n);

// Nonempty-powerset monad structure, at the level of subsets.

/// Subset of (k] named by a pplus element (the image of its mono).
std::vector<Point> pplus_subset(const SanElem& e);
SanElem pplus_from_subset(std::size_t k, const std::vector<Point>& subset);
SanElem pplus_unit(std::size_t k, Point x);
/// Union of the members of tt, an element over the listing inner.
SanElem pplus_multiply(const std::vector<SanElem>& inner, std::size_t k, const SanElem& tt);

/// Unit and multiplication laws of an algebra for pplus.
CheckReport check_pplus_algebra_laws(const Algebra& alg);

/// Functions (X]->(n] indexed lexicographically from 1.
std::vector<FinFun> exponential_listing(std::size_t n, std::size_t x_size);

/// The algebra on (n]^X obtained as the exponential adjoint of
/// alpha . T(ev) . st. t is an element over (n^X].
FinFun exponential_algebra(const SurCoeff& b, const Algebra& alg, std::size_t x_size, const SanElem& t);

/// The pointwise algebra: x |-> alpha(T(eval_x)(t)).
FinFun pointwise_algebra(const SurCoeff& b, const Algebra& alg, std::size_t x_size, const SanElem& t);

/// exponential_algebra == pointwise_algebra for every |X| <= max_x and
/// every t over (n]^X.
CheckReport check_exponential_pointwise(const SurCoeff& b, const Algebra& alg, std::size_t max_x);

}  // namespace cosan
