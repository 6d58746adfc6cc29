#include "cosan/finset.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "cosan/error.hpp"
#include "union_find.hpp"

namespace cosan {

FinFun::FinFun(std::size_t cod, std::vector<Point> values) : cod_(cod), values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1 || values_[i] > cod_) {
      throw Error(ErrorKind::Malformed, "function value out of range",
                  {{"position", i + 1}, {"value", values_[i]}, {"cod", cod_}});
    }
  }
}

FinFun FinFun::identity(std::size_t n) {
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i + 1);
  return FinFun(n, std::move(v));
}

std::string FinFun::literal() const {
  std::string out = std::to_string(dom()) + ">" + std::to_string(cod_) + ":";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

namespace {

std::size_t parse_number(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::Malformed, "bad function literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

FinFun FinFun::parse(std::string_view text) {
  const auto gt = text.find('>');
  const auto colon = text.find(':');
  if (gt == std::string_view::npos || colon == std::string_view::npos || colon < gt) {
    throw Error(ErrorKind::Malformed, "bad function literal '" + std::string(text) + "'");
  }
  const auto dom = parse_number(text.substr(0, gt), text);
  const auto cod = parse_number(text.substr(gt + 1, colon - gt - 1), text);
  std::vector<Point> values;
  auto rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const auto token = rest.substr(0, comma);
    values.push_back(static_cast<Point>(parse_number(token, text)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
    if (rest.empty()) throw Error(ErrorKind::Malformed, "trailing comma in '" + std::string(text) + "'");
  }
  if (values.size() != dom) {
    throw Error(ErrorKind::Malformed, "literal length does not match domain in '" + std::string(text) + "'");
  }
  return FinFun(cod, std::move(values));
}

std::strong_ordering operator<=>(const FinFun& a, const FinFun& b) {
  if (auto c = a.dom() <=> b.dom(); c != 0) return c;
  if (auto c = a.cod_ <=> b.cod_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(), b.values_.begin(),
                                                b.values_.end());
}

Classification classify(const FinFun& f) {
  std::vector<std::size_t> fiber(f.cod() + 1, 0);
  for (Point v : f.values()) ++fiber[v];
  Classification c;
  c.injective = std::all_of(fiber.begin() + 1, fiber.end(), [](std::size_t s) { return s <= 1; });
  c.surjective = std::all_of(fiber.begin() + 1, fiber.end(), [](std::size_t s) { return s >= 1; });
  c.bijective = c.injective && c.surjective;
  return c;
}

bool is_injective(const FinFun& f) { return classify(f).injective; }
bool is_surjective(const FinFun& f) { return classify(f).surjective; }
bool is_bijective(const FinFun& f) { return classify(f).bijective; }

FinFun compose(const FinFun& g, const FinFun& f) {
  if (f.cod() != g.dom()) {
    throw Error(ErrorKind::CodMismatch, "cannot compose " + g.literal() + " after " + f.literal(),
                {{"g", g.literal()}, {"f", f.literal()}});
  }
  std::vector<Point> v(f.dom());
  for (std::size_t i = 1; i <= f.dom(); ++i) v[i - 1] = g(f(i));
  return FinFun(g.cod(), std::move(v));
}

FinFun inverse(const FinFun& sigma) {
  if (!is_bijective(sigma)) {
    throw Error(ErrorKind::NotInjective, "not a bijection: " + sigma.literal(), sigma.literal());
  }
  std::vector<Point> v(sigma.dom());
  for (std::size_t i = 1; i <= sigma.dom(); ++i) v[sigma(i) - 1] = static_cast<Point>(i);
  return FinFun(sigma.dom(), std::move(v));
}

EpiMono epi_mono_factorize(const FinFun& f) {
  std::vector<char> hit(f.cod() + 1, 0);
  for (Point v : f.values()) hit[v] = 1;
  std::vector<Point> rank(f.cod() + 1, 0);
  std::vector<Point> image;
  for (std::size_t v = 1; v <= f.cod(); ++v) {
    if (hit[v]) {
      image.push_back(static_cast<Point>(v));
      rank[v] = static_cast<Point>(image.size());
    }
  }
  std::vector<Point> e(f.dom());
  for (std::size_t i = 1; i <= f.dom(); ++i) e[i - 1] = rank[f(i)];
  const auto r = image.size();
  return {FinFun(r, std::move(e)), FinFun(f.cod(), std::move(image))};
}

OrbitForm canonical_epi_form(const FinFun& x) {
  if (!is_surjective(x)) throw Error(ErrorKind::NotEpi, "not an epi: " + x.literal(), x.literal());
  const auto n = x.cod();
  std::vector<Point> label(n + 1, 0);
  std::vector<Point> sigma(n, 0);
  std::vector<Point> c(x.dom());
  Point next = 0;
  for (std::size_t i = 1; i <= x.dom(); ++i) {
    const Point v = x(i);
    if (label[v] == 0) {
      label[v] = ++next;
      sigma[next - 1] = v;
    }
    c[i - 1] = label[v];
  }
  return {FinFun(n, std::move(sigma)), FinFun(n, std::move(c))};
}

bool is_canonical_epi(const FinFun& x) {
  Point next = 0;
  for (Point v : x.values()) {
    if (v > next + 1) return false;
    if (v == next + 1) ++next;
  }
  return next == x.cod();
}

Pushout pushout(const FinFun& f, const FinFun& g) {
  if (f.dom() != g.dom()) {
    throw Error(ErrorKind::DomMismatch, "pushout legs have different domains",
                {{"f", f.literal()}, {"g", g.literal()}});
  }
  const auto nx = f.cod();
  const auto ny = g.cod();
  detail::DisjointSets sets(nx + ny);
  for (std::size_t i = 1; i <= f.dom(); ++i) sets.unite(f(i) - 1, nx + g(i) - 1);

  std::vector<Point> block_label(nx + ny, 0);
  Point next = 0;
  std::vector<Point> in_x(nx), in_y(ny);
  for (std::size_t k = 0; k < nx + ny; ++k) {
    auto root = sets.find(k);
    if (block_label[root] == 0) block_label[root] = ++next;
    (k < nx ? in_x[k] : in_y[k - nx]) = block_label[root];
  }
  return {next, FinFun(next, std::move(in_x)), FinFun(next, std::move(in_y))};
}

Pullback pullback(const FinFun& f, const FinFun& g) {
  if (f.cod() != g.cod()) {
    throw Error(ErrorKind::CodMismatch, "pullback legs have different codomains",
                {{"f", f.literal()}, {"g", g.literal()}});
  }
  Pullback out;
  std::vector<Point> px, py;
  for (std::size_t i = 1; i <= f.dom(); ++i) {
    for (std::size_t j = 1; j <= g.dom(); ++j) {
      if (f(i) == g(j)) {
        out.pairs.emplace_back(static_cast<Point>(i), static_cast<Point>(j));
        px.push_back(static_cast<Point>(i));
        py.push_back(static_cast<Point>(j));
      }
    }
  }
  out.proj_x = FinFun(f.dom(), std::move(px));
  out.proj_y = FinFun(g.dom(), std::move(py));
  return out;
}

PullbackVerdict is_pullback_square(const Square& sq) {
  const auto& [top, left, right, bottom] = sq;
  if (top.dom() != left.dom() || top.cod() != right.dom() || left.cod() != bottom.dom() ||
      right.cod() != bottom.cod()) {
    throw Error(ErrorKind::Malformed, "square legs do not fit together");
  }
  for (std::size_t c = 1; c <= top.dom(); ++c) {
    if (right(top(c)) != bottom(left(c))) {
      throw Error(ErrorKind::NonCommuting, "square does not commute", {{"corner_element", c}});
    }
  }

  // Corner elements indexed by their image pair.
  const auto nb = top.cod();
  std::map<std::pair<Point, Point>, Point> preimage;
  for (std::size_t c = 1; c <= top.dom(); ++c) {
    auto [it, fresh] = preimage.emplace(std::pair{left(c), top(c)}, static_cast<Point>(c));
    if (!fresh) {
      return {false,
              {{"kind", "collision"}, {"corner", {it->second, c}}, {"image", {left(c), top(c)}}}};
    }
  }

  std::vector<std::vector<Point>> fiber_b(bottom.cod() + 1);
  for (std::size_t b = 1; b <= nb; ++b) fiber_b[right(b)].push_back(static_cast<Point>(b));
  for (std::size_t a = 1; a <= left.cod(); ++a) {
    for (Point b : fiber_b[bottom(a)]) {
      if (!preimage.contains({static_cast<Point>(a), b})) {
        return {false, {{"kind", "missed"}, {"pair", {a, b}}}};
      }
    }
  }
  return {};
}

std::string_view to_string(FunKind kind) {
  switch (kind) {
    case FunKind::All: return "all";
    case FunKind::Inj: return "inj";
    case FunKind::Sur: return "sur";
    case FunKind::Bij: return "bij";
  }
  return "all";
}

namespace {

struct FunctionWalker {
  FunKind kind;
  std::size_t m;
  std::size_t n;
  const std::function<void(std::span<const Point>)>& visit;
  std::vector<Point> values;
  std::vector<std::size_t> uses;
  std::size_t covered = 0;

  void run(std::size_t pos) {
    if (pos == m) {
      if ((kind == FunKind::Sur || kind == FunKind::Bij) && covered != n) return;
      visit(values);
      return;
    }
    const bool injective = kind == FunKind::Inj || kind == FunKind::Bij;
    const bool surjective = kind == FunKind::Sur || kind == FunKind::Bij;
    for (std::size_t v = 1; v <= n; ++v) {
      if (injective && uses[v]) continue;
      const bool fresh = uses[v] == 0;
      const auto covered_after = covered + (fresh ? 1 : 0);
      if (surjective && n - covered_after > m - pos - 1) continue;
      values[pos] = static_cast<Point>(v);
      ++uses[v];
      covered = covered_after;
      run(pos + 1);
      --uses[v];
      if (fresh) --covered;
    }
  }
};

}  // namespace

void for_each_function(FunKind kind, std::size_t m, std::size_t n,
                       const std::function<void(std::span<const Point>)>& visit) {
  if (kind == FunKind::Bij && m != n) return;
  FunctionWalker walker{kind, m, n, visit, std::vector<Point>(m), std::vector<std::size_t>(n + 1, 0)};
  walker.run(0);
}

std::vector<FinFun> enumerate(FunKind kind, std::size_t m, std::size_t n) {
  std::vector<FinFun> out;
  for_each_function(kind, m, n, [&](std::span<const Point> v) {
    out.emplace_back(n, std::vector<Point>(v.begin(), v.end()));
  });
  return out;
}

namespace {

void grow_canonical(std::size_t k, std::size_t n, std::vector<Point>& prefix, Point max_label,
                    std::vector<FinFun>& out) {
  const auto pos = prefix.size();
  if (pos == k) {
    if (max_label == n) out.emplace_back(n, prefix);
    return;
  }
  // Enough positions must remain to introduce the missing labels.
  for (Point v = 1; v <= std::min<std::size_t>(max_label + 1, n); ++v) {
    const Point new_max = std::max(max_label, v);
    if (n - new_max > k - pos - 1) continue;
    prefix.push_back(v);
    grow_canonical(k, n, prefix, new_max, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<FinFun> canonical_epis(std::size_t k, std::size_t n) {
  std::vector<FinFun> out;
  if (n > k) return out;
  std::vector<Point> prefix;
  prefix.reserve(k);
  grow_canonical(k, n, prefix, 0, out);
  return out;
}

std::vector<FinFun> ascending_monos(std::size_t n, std::size_t k) {
  std::vector<FinFun> out;
  if (n > k) return out;
  std::vector<Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Point>(i + 1);
  while (true) {
    out.emplace_back(k, v);
    // Advance to the next n-subset in lexicographic order.
    std::size_t i = n;
    while (i > 0 && v[i - 1] == k - n + i) --i;
    if (i == 0) break;
    ++v[i - 1];
    for (std::size_t j = i; j < n; ++j) v[j] = v[j - 1] + 1;
  }
  return out;
}

FinFun table_fun(std::span<const std::size_t> table, std::size_t cod) {
  std::vector<Point> v(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) v[i] = static_cast<Point>(table[i] + 1);
  return FinFun(cod, std::move(v));
}

}  // namespace cosan
