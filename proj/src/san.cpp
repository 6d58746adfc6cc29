#include "cosan/san.hpp"

#include <algorithm>
#include <limits>

#include "cosan/error.hpp"

namespace cosan {

SanElem canonical_san(const SurCoeff& b, Elem element, const FinFun& mono) {
  if (!is_injective(mono)) throw Error(ErrorKind::NotInjective, "not a mono: " + mono.literal(), mono.literal());
  const auto n = mono.dom();
  std::vector<Point> image(mono.values().begin(), mono.values().end());
  std::sort(image.begin(), image.end());
  std::vector<Point> pi(n);
  for (std::size_t j = 1; j <= n; ++j) {
    pi[j - 1] = static_cast<Point>(std::lower_bound(image.begin(), image.end(), mono(j)) - image.begin() + 1);
  }
  return {n, b.act(FinFun(n, std::move(pi)), element), FinFun(mono.cod(), std::move(image))};
}

namespace {

std::size_t binomial(std::size_t k, std::size_t n) {
  if (n > k) return 0;
  n = std::min(n, k - n);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    // r * (k - n + i) / i stays integral at every step.
    const auto factor = k - n + i;
    if (r > std::numeric_limits<std::size_t>::max() / factor) return std::numeric_limits<std::size_t>::max();
    r = r * factor / i;
  }
  return r;
}

}  // namespace

std::size_t san_size(const SurCoeff& b, std::size_t k) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t total = 0;
  for (std::size_t n = 0; n <= k; ++n) {
    const auto levels = b.size(n);
    if (levels == 0) continue;
    const auto c = binomial(k, n);
    if (c == kMax || c > kMax / levels) return kMax;
    const auto add = levels * c;
    if (total > kMax - add) return kMax;
    total += add;
  }
  return total;
}

std::vector<SanElem> san_evaluate(const SurCoeff& b, std::size_t k) {
  std::vector<SanElem> out;
  for (std::size_t n = 0; n <= k; ++n) {
    const auto count = b.size(n);
    if (count == 0) continue;
    const auto monos = ascending_monos(n, k);
    for (Elem x = 0; x < count; ++x) {
      for (const auto& m : monos) out.push_back({n, x, m});
    }
  }
  return out;
}

SanElem san_map(const SurCoeff& b, const FinFun& f, const SanElem& e) {
  auto [s, mono] = epi_mono_factorize(compose(f, e.mono));
  return {s.cod(), b.act(s, e.coeff), std::move(mono)};
}

SanIndex::SanIndex(std::vector<SanElem> elements) : elements_(std::move(elements)) {
  for (Elem i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

Elem SanIndex::index_of(const SanElem& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) {
    throw Error(ErrorKind::IndexOutOfRange, "element not in this listing",
                {{"level", e.level}, {"mono", e.mono.literal()}});
  }
  return it->second;
}

Point product_index(std::size_t y_size, Point x, Point y) {
  return static_cast<Point>((x - 1) * y_size + y);
}

FinFun pairing(std::size_t x_size, std::size_t y_size, Point x) {
  if (x < 1 || x > x_size) {
    throw Error(ErrorKind::IndexOutOfRange, "point outside (" + std::to_string(x_size) + "]", x);
  }
  std::vector<Point> v(y_size);
  for (std::size_t y = 1; y <= y_size; ++y) v[y - 1] = product_index(y_size, x, static_cast<Point>(y));
  return FinFun(x_size * y_size, std::move(v));
}

SanElem strength(const SurCoeff& b, std::size_t x_size, std::size_t y_size, Point x, const SanElem& t) {
  if (t.mono.cod() != y_size) {
    throw Error(ErrorKind::IndexOutOfRange, "element does not live over (" + std::to_string(y_size) + "]",
                t.mono.literal());
  }
  return san_map(b, pairing(x_size, y_size, x), t);
}

namespace {

class ListingCache {
 public:
  explicit ListingCache(const SurCoeff& b) : b_(b) {}

  const SanIndex& at(std::size_t k) {
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, SanIndex(san_evaluate(b_, k))).first;
    return it->second;
  }

 private:
  const SurCoeff& b_;
  std::map<std::size_t, SanIndex> cache_;
};

// Builds the naturality square of the strength at (u, v) and tests it.
nlohmann::json strength_square_failure(const SurCoeff& b, ListingCache& listings, const StrengthFn& st,
                                       const FinFun& u, const FinFun& v) {
  const auto xs = u.dom(), x = u.cod();
  const auto ys = v.dom(), y = v.cod();
  const auto& t_small = listings.at(ys);
  const auto& t_big = listings.at(y);
  const auto& tp_small = listings.at(xs * ys);
  const auto& tp_big = listings.at(x * y);
  const auto ts = t_small.elements().size();
  const auto tb = t_big.elements().size();

  std::vector<Point> uv(xs * ys);
  for (Point i = 1; i <= xs; ++i) {
    for (Point j = 1; j <= ys; ++j) uv[product_index(ys, i, j) - 1] = product_index(y, u(i), v(j));
  }
  const FinFun u_times_v(x * y, std::move(uv));

  std::vector<Point> top, left, right, bottom;
  for (Point i = 1; i <= xs; ++i) {
    for (Elem j = 0; j < ts; ++j) {
      const auto& t = t_small.elements()[j];
      top.push_back(static_cast<Point>(tp_small.index_of(st(b, xs, ys, i, t)) + 1));
      const auto moved = t_big.index_of(san_map(b, v, t));
      left.push_back(product_index(tb, u(i), static_cast<Point>(moved + 1)));
    }
  }
  for (const auto& s : tp_small.elements()) {
    right.push_back(static_cast<Point>(tp_big.index_of(san_map(b, u_times_v, s)) + 1));
  }
  for (Point i = 1; i <= x; ++i) {
    for (const auto& t : t_big.elements()) {
      bottom.push_back(static_cast<Point>(tp_big.index_of(st(b, x, y, i, t)) + 1));
    }
  }
  const Square sq{FinFun(tp_small.elements().size(), std::move(top)), FinFun(x * tb, std::move(left)),
                  FinFun(tp_big.elements().size(), std::move(right)),
                  FinFun(tp_big.elements().size(), std::move(bottom))};
  auto verdict = is_pullback_square(sq);
  if (verdict.is_pullback) return nullptr;
  return std::move(verdict.witness);
}

}  // namespace

CheckReport check_strength_semicartesian(const SurCoeff& b, std::size_t w, const StrengthFn& st) {
  ListingCache listings(b);
  nlohmann::json first_x = nullptr, first_y = nullptr, first_joint = nullptr;
  for (std::size_t x = 0; x <= w; ++x) {
    for (std::size_t y = 0; y <= w; ++y) {
      for (std::size_t xs = 0; xs <= x; ++xs) {
        for (const auto& u : enumerate(FunKind::Inj, xs, x)) {
          for (std::size_t ys = 0; ys <= y; ++ys) {
            for (const auto& v : enumerate(FunKind::Inj, ys, y)) {
              nlohmann::json failure;
              try {
                failure = strength_square_failure(b, listings, st, u, v);
              } catch (const Error& err) {
                failure = {{"kind", std::string(to_string(err.kind()))}, {"detail", err.what()}};
              }
              if (failure.is_null()) continue;
              nlohmann::json witness = {{"u", u.literal()}, {"v", v.literal()}, {"square", failure}};
              if (first_joint.is_null()) first_joint = witness;
              if (first_x.is_null() && v == FinFun::identity(y)) first_x = witness;
              if (first_y.is_null() && u == FinFun::identity(x)) first_y = witness;
            }
          }
        }
      }
    }
  }
  auto part = [](std::string name, nlohmann::json witness) {
    return witness.is_null() ? CheckReport::pass(std::move(name)) : CheckReport::fail(std::move(name), witness);
  };
  return combine("strength-semicartesian", {part("strength-semicartesian/first-variable", first_x),
                                            part("strength-semicartesian/second-variable", first_y),
                                            part("strength-semicartesian/joint", first_joint)});
}

Algebra max_algebra(std::size_t n) {
  Algebra alg{n, {}};
  for (const auto& e : san_evaluate(SurCoeff::pplus(), n)) alg.alpha.push_back(e.mono(e.level));
  return alg;
}

std::vector<Point> pplus_subset(const SanElem& e) { return {e.mono.values().begin(), e.mono.values().end()}; }

SanElem pplus_from_subset(std::size_t k, const std::vector<Point>& subset) {
  std::vector<Point> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw Error(ErrorKind::IllTyped, "pplus has no empty subset");
  const auto n = sorted.size();
  return {n, 0, FinFun(k, std::move(sorted))};
}

SanElem pplus_unit(std::size_t k, Point x) { return pplus_from_subset(k, {x}); }

SanElem pplus_multiply(const std::vector<SanElem>& inner, std::size_t k, const SanElem& tt) {
  std::vector<Point> all;
  for (Point i : tt.mono.values()) {
    const auto part = pplus_subset(inner.at(i - 1));
    all.insert(all.end(), part.begin(), part.end());
  }
  return pplus_from_subset(k, all);
}

CheckReport check_pplus_algebra_laws(const Algebra& alg) {
  const std::string name = "pplus-algebra";
  const auto pplus = SurCoeff::pplus();
  const auto n = alg.carrier;
  const SanIndex tn(san_evaluate(pplus, n));
  if (alg.alpha.size() != tn.elements().size() ||
      std::any_of(alg.alpha.begin(), alg.alpha.end(), [&](Point v) { return v < 1 || v > n; })) {
    return CheckReport::error(name, {{"reason", "structure map is not a function T(n] -> (n]"}});
  }
  for (Point x = 1; x <= n; ++x) {
    if (alg.alpha[tn.index_of(pplus_unit(n, x))] != x) {
      return CheckReport::fail(name, {{"law", "unit"}, {"point", x}});
    }
  }
  const FinFun alpha_fun(n, alg.alpha);
  for (const auto& tt : san_evaluate(pplus, tn.elements().size())) {
    const auto lhs = alg.alpha[tn.index_of(pplus_multiply(tn.elements(), n, tt))];
    const auto rhs = alg.alpha[tn.index_of(san_map(pplus, alpha_fun, tt))];
    if (lhs != rhs) {
      return CheckReport::fail(name, {{"law", "multiplication"}, {"element", tt.mono.literal()}});
    }
  }
  return CheckReport::pass(name);
}

std::vector<FinFun> exponential_listing(std::size_t n, std::size_t x_size) {
  return enumerate(FunKind::All, x_size, n);
}

namespace {

void check_over_listing(std::size_t listing_size, const SanElem& t) {
  if (t.mono.cod() != listing_size) {
    throw Error(ErrorKind::IndexOutOfRange, "element does not live over the function set",
                {{"expected", listing_size}, {"got", t.mono.cod()}});
  }
}

}  // namespace

FinFun exponential_algebra(const SurCoeff& b, const Algebra& alg, std::size_t x_size, const SanElem& t) {
  const auto n = alg.carrier;
  const auto functions = exponential_listing(n, x_size);
  const auto count = functions.size();
  check_over_listing(count, t);
  const SanIndex tn(san_evaluate(b, n));

  std::vector<Point> ev(x_size * count);
  for (Point x = 1; x <= x_size; ++x) {
    for (Point j = 1; j <= count; ++j) ev[product_index(count, x, j) - 1] = functions[j - 1](x);
  }
  const FinFun evaluation(n, std::move(ev));

  std::vector<Point> out(x_size);
  for (Point x = 1; x <= x_size; ++x) {
    const auto paired = strength(b, x_size, count, x, t);
    out[x - 1] = alg.alpha.at(tn.index_of(san_map(b, evaluation, paired)));
  }
  return FinFun(n, std::move(out));
}

FinFun pointwise_algebra(const SurCoeff& b, const Algebra& alg, std::size_t x_size, const SanElem& t) {
  const auto n = alg.carrier;
  const auto functions = exponential_listing(n, x_size);
  check_over_listing(functions.size(), t);
  const SanIndex tn(san_evaluate(b, n));

  std::vector<Point> out(x_size);
  for (Point x = 1; x <= x_size; ++x) {
    std::vector<Point> at_x;
    for (const auto& g : functions) at_x.push_back(g(x));
    const FinFun eval_x(n, std::move(at_x));
    out[x - 1] = alg.alpha.at(tn.index_of(san_map(b, eval_x, t)));
  }
  return FinFun(n, std::move(out));
}

}  // namespace cosan

namespace cosan {

CheckReport check_exponential_pointwise(const SurCoeff& b, const Algebra& alg, std::size_t max_x) {
  const std::string name = "exponential-pointwise";
  for (std::size_t x = 0; x <= max_x; ++x) {
    const auto count = exponential_listing(alg.carrier, x).size();
    for (const auto& t : san_evaluate(b, count)) {
      const auto lhs = exponential_algebra(b, alg, x, t);
      const auto rhs = pointwise_algebra(b, alg, x, t);
      if (lhs != rhs) {
        return CheckReport::fail(name, {{"x", x},
                                        {"t", {{"n", t.level}, {"mono", t.mono.literal()}}},
                                        {"exponential", lhs.literal()},
                                        {"pointwise", rhs.literal()}});
      }
    }
  }
  return CheckReport::pass(name);
}

}  // namespace cosan
