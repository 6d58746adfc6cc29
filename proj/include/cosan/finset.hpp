#pragma once

// The skeletal category of finite sets (n] = {1,...,n}: functions, their
// classification and factorizations, the pushouts and pullbacks the
// verification suites need, and exhaustive enumeration of hom-sets.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace cosan {

using Point = std::uint32_t;  // 1-based element of some (n]

/// A function (m] -> (n], stored as its value sequence f(1),...,f(m).
class FinFun {
 public:
  /// The empty map (0] -> (0].
  FinFun() = default;

  /// Throws Malformed if some value lies outside 1..cod.
  FinFun(std::size_t cod, std::vector<Point> values);

  static FinFun identity(std::size_t n);

  std::size_t dom() const noexcept { return values_.size(); }
  std::size_t cod() const noexcept { return cod_; }
  std::span<const Point> values() const noexcept { return values_; }

  /// f(i) for 1 <= i <= dom().
  Point operator()(std::size_t i) const { return values_[i - 1]; }

  /// Literal form "m>n:v1,...,vm"; "0>n:" for the empty domain.
  std::string literal() const;
  static FinFun parse(std::string_view text);

  friend bool operator==(const FinFun&, const FinFun&) = default;
  friend std::strong_ordering operator<=>(const FinFun& a, const FinFun& b);

 private:
  std::size_t cod_ = 0;
  std::vector<Point> values_;
};

struct Classification {
  bool injective = false;
  bool surjective = false;
  bool bijective = false;
};

Classification classify(const FinFun& f);
bool is_injective(const FinFun& f);
bool is_surjective(const FinFun& f);
bool is_bijective(const FinFun& f);

/// g . f; throws CodMismatch unless f.cod() == g.dom().
FinFun compose(const FinFun& g, const FinFun& f);

/// Inverse of a bijection; throws NotInjective otherwise.
FinFun inverse(const FinFun& sigma);

struct EpiMono {
  FinFun epi;
  FinFun mono;  // strictly increasing enumeration of the image
};

/// f = mono . epi with the mono listing im(f) in ascending order.
EpiMono epi_mono_factorize(const FinFun& f);

struct OrbitForm {
  FinFun perm;       // sigma in S_n
  FinFun canonical;  // labels introduced in order 1,2,3,... scanning left to right
};

/// x = perm . canonical; throws NotEpi if x is not surjective.
OrbitForm canonical_epi_form(const FinFun& x);

bool is_canonical_epi(const FinFun& x);

struct Pushout {
  std::size_t size = 0;
  FinFun in_x;  // f.cod -> (size]
  FinFun in_y;  // g.cod -> (size]
};

/// Pushout of X <-f- Z -g-> Y by union-find on X + Y. Blocks are numbered
/// by first occurrence, scanning X then Y. Throws DomMismatch.
Pushout pushout(const FinFun& f, const FinFun& g);

struct Pullback {
  std::vector<std::pair<Point, Point>> pairs;  // lexicographic
  FinFun proj_x;                               // (|pairs|] -> f.dom
  FinFun proj_y;                               // (|pairs|] -> g.dom
};

/// Fiber product of X -f-> Z <-g- Y. Throws CodMismatch.
Pullback pullback(const FinFun& f, const FinFun& g);

/// A commuting square
///
///   C --top--> B
///   |          |
///  left      right
///   v          v
///   A --bottom-> D
///
/// with right . top == bottom . left.
struct Square {
  FinFun top;
  FinFun left;
  FinFun right;
  FinFun bottom;
};

struct PullbackVerdict {
  bool is_pullback = true;
  // For a miss: the fiber-product pair (a, b) outside the image.
  // For a collision: two corner elements with the same image.
  nlohmann::json witness = nullptr;
};

/// Tests whether the comparison C -> A x_D B is a bijection. Throws
/// NonCommuting (or a shape error) if the square is malformed.
PullbackVerdict is_pullback_square(const Square& sq);

enum class FunKind { All, Inj, Sur, Bij };

std::string_view to_string(FunKind kind);

/// Calls visit on every function (m] -> (n] of the given kind, in
/// lexicographic order of the value sequences. The span is only valid
/// during the call.
void for_each_function(FunKind kind, std::size_t m, std::size_t n,
                       const std::function<void(std::span<const Point>)>& visit);

std::vector<FinFun> enumerate(FunKind kind, std::size_t m, std::size_t n);

/// Canonical (first-occurrence) epis (k] -> (n], lexicographic.
std::vector<FinFun> canonical_epis(std::size_t k, std::size_t n);

/// Strictly increasing injections (n] -> (k], lexicographic.
std::vector<FinFun> ascending_monos(std::size_t n, std::size_t k);

/// Converts a 0-based index table between finite sets into a FinFun.
FinFun table_fun(std::span<const std::size_t> table, std::size_t cod);

}  // namespace cosan
