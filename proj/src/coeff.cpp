#include "cosan/coeff.hpp"

#include <algorithm>
#include <charconv>
#include <mutex>

#include "cosan/error.hpp"

namespace cosan {

const std::vector<FinFun>& injections_into(std::size_t n) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<FinFun>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<FinFun> all;
    for (std::size_t j = 0; j <= n; ++j) {
      auto inj = enumerate(FunKind::Inj, j, n);
      all.insert(all.end(), inj.begin(), inj.end());
    }
    it = cache.emplace(n, std::move(all)).first;
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// InjCoeff

InjCoeff::InjCoeff(LevelNames sets, std::map<FinFun, Table> actions)
    : sets_(std::move(sets)), actions_(std::move(actions)) {
  if (sets_.empty()) throw Error(ErrorKind::Malformed, "coefficient functor needs at least level 0");
  const auto w = window();
  for (const auto& [f, t] : actions_) {
    if (f.cod() > w || !is_injective(f)) {
      throw Error(ErrorKind::Malformed, "table for a non-window injection " + f.literal(), f.literal());
    }
  }
  for (std::size_t m = 0; m <= w; ++m) {
    for (const auto& f : injections_into(m)) {
      auto it = actions_.find(f);
      if (it == actions_.end()) {
        throw Error(ErrorKind::Malformed, "missing table for injection " + f.literal(), f.literal());
      }
      const auto& t = it->second;
      if (t.size() != sets_[m].size()) {
        throw Error(ErrorKind::Malformed, "table of " + f.literal() + " has the wrong length", f.literal());
      }
      for (Elem v : t) {
        if (v >= sets_[f.dom()].size()) {
          throw Error(ErrorKind::Malformed, "table of " + f.literal() + " points outside its level",
                      f.literal());
        }
      }
    }
  }
}

std::size_t InjCoeff::size(std::size_t n) const {
  if (n > window()) throw Error(ErrorKind::OutOfWindow, "level " + std::to_string(n) + " outside window", n);
  return sets_[n].size();
}

std::vector<std::size_t> InjCoeff::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& s : sets_) out.push_back(s.size());
  return out;
}

const std::vector<std::string>& InjCoeff::names(std::size_t n) const {
  if (n > window()) throw Error(ErrorKind::OutOfWindow, "level " + std::to_string(n) + " outside window", n);
  return sets_[n];
}

const Table& InjCoeff::table(const FinFun& f) const {
  if (f.cod() > window()) throw Error(ErrorKind::OutOfWindow, "injection leaves the window", f.literal());
  if (!is_injective(f)) throw Error(ErrorKind::NotInjective, "not an injection: " + f.literal(), f.literal());
  return actions_.at(f);
}

InjCoeff InjCoeff::truncate(std::size_t w) const {
  if (w > window()) throw Error(ErrorKind::OutOfWindow, "cannot truncate above the window", w);
  LevelNames sets(sets_.begin(), sets_.begin() + static_cast<std::ptrdiff_t>(w + 1));
  std::map<FinFun, Table> actions;
  for (const auto& [f, t] : actions_) {
    if (f.cod() <= w) actions.emplace(f, t);
  }
  return InjCoeff(std::move(sets), std::move(actions));
}

Elem act_inj(const InjCoeff& a, const FinFun& f, Elem element) {
  const auto& t = a.table(f);
  if (element >= t.size()) {
    throw Error(ErrorKind::IndexOutOfRange, "element outside A_" + std::to_string(f.cod()),
                {{"level", f.cod()}, {"element", element}});
  }
  return t[element];
}

CheckReport validate_inj_coeff(const InjCoeff& a) {
  const std::string name = "inj-coeff";
  const auto w = a.window();
  for (std::size_t n = 0; n <= w; ++n) {
    const auto& t = a.table(FinFun::identity(n));
    for (Elem x = 0; x < t.size(); ++x) {
      if (t[x] != x) {
        return CheckReport::fail(name, {{"law", "identity"}, {"level", n}, {"element", a.names(n)[x]}});
      }
    }
  }
  // (x . f) . g == x . (f . g) for g:(i]->(j], f:(j]->(m].
  for (std::size_t m = 0; m <= w; ++m) {
    for (const auto& f : injections_into(m)) {
      const auto& tf = a.table(f);
      for (const auto& g : injections_into(f.dom())) {
        const auto& tg = a.table(g);
        const auto& tfg = a.table(compose(f, g));
        for (Elem x = 0; x < tf.size(); ++x) {
          if (tg[tf[x]] != tfg[x]) {
            return CheckReport::fail(name, {{"law", "composition"},
                                            {"f", f.literal()},
                                            {"g", g.literal()},
                                            {"element", a.names(m)[x]}});
          }
        }
      }
    }
  }
  return CheckReport::pass(name);
}

namespace {

std::size_t parse_exp_arity(const std::string& name) {
  std::size_t n = 0;
  const auto digits = std::string_view(name).substr(4);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error(ErrorKind::Malformed, "bad builtin coefficient name '" + name + "'");
  }
  return n;
}

InjCoeff representable(std::size_t n, std::size_t window) {
  LevelNames sets(window + 1);
  std::vector<std::vector<FinFun>> elems(window + 1);
  std::vector<std::map<FinFun, Elem>> index(window + 1);
  for (std::size_t m = 0; m <= window; ++m) {
    elems[m] = enumerate(FunKind::Inj, m, n);
    for (Elem i = 0; i < elems[m].size(); ++i) {
      sets[m].push_back(elems[m][i].literal());
      index[m].emplace(elems[m][i], i);
    }
  }
  return make_inj_coeff(std::move(sets), [&](const FinFun& f, Elem a) {
    return index[f.dom()].at(compose(elems[f.cod()][a], f));
  });
}

}  // namespace

InjCoeff builtin_inj_coeff(const std::string& name, std::size_t window) {
  if (name == "powerset") return representable(2, window);
  if (name.rfind("exp:", 0) == 0) return representable(parse_exp_arity(name), window);
  if (name == "partition") {
    return make_inj_coeff(LevelNames(window + 1, {"*"}), [](const FinFun&, Elem) { return Elem{0}; });
  }
  if (name == "constant") {
    LevelNames sets(window + 1);
    for (std::size_t n = 0; n <= std::min<std::size_t>(window, 1); ++n) sets[n] = {"*"};
    return make_inj_coeff(std::move(sets), [](const FinFun&, Elem) { return Elem{0}; });
  }
  throw Error(ErrorKind::Malformed, "unknown builtin coefficient functor '" + name + "'", name);
}

// ---------------------------------------------------------------------------
// Natural transformations

CheckReport validate_inj_nat(const InjNat& tau) {
  const std::string name = "inj-nat";
  const auto& a = tau.source;
  const auto& b = tau.target;
  if (a.window() != b.window() || tau.components.size() != a.window() + 1) {
    return CheckReport::error(name, {{"reason", "window mismatch"}});
  }
  for (std::size_t n = 0; n <= a.window(); ++n) {
    const auto& c = tau.components[n];
    if (!c) {
      if (a.size(n) != 0) return CheckReport::fail(name, {{"reason", "undefined component"}, {"level", n}});
      continue;
    }
    if (c->size() != a.size(n) ||
        std::any_of(c->begin(), c->end(), [&](Elem v) { return v >= b.size(n); })) {
      return CheckReport::fail(name, {{"reason", "component is not a total map"}, {"level", n}});
    }
  }
  // tau_n(x . f) == tau_m(x) . f for every injection f:(n]->(m].
  for (std::size_t m = 0; m <= a.window(); ++m) {
    if (a.size(m) == 0) continue;
    const auto& tm = *tau.components[m];
    for (const auto& f : injections_into(m)) {
      const auto& tn = tau.components[f.dom()];
      const auto& af = a.table(f);
      const auto& bf = b.table(f);
      for (Elem x = 0; x < a.size(m); ++x) {
        if ((*tn)[af[x]] != bf[tm[x]]) {
          return CheckReport::fail(name, {{"reason", "not natural"},
                                          {"injection", f.literal()},
                                          {"element", a.names(m)[x]}});
        }
      }
    }
  }
  return CheckReport::pass(name);
}

InjNat identity_nat(const InjCoeff& a) {
  InjNat tau{a, a, {}};
  for (std::size_t n = 0; n <= a.window(); ++n) {
    Table t(a.size(n));
    for (Elem x = 0; x < t.size(); ++x) t[x] = x;
    tau.components.emplace_back(std::move(t));
  }
  return tau;
}

namespace {

// Assigns images top level first; fixing the image of x at level n forces
// the image of every x . f, so most choices are propagated, not guessed.
class HomSearch {
 public:
  HomSearch(const InjCoeff& a, const InjCoeff& b, bool bijective, std::size_t limit)
      : a_(a), b_(b), bijective_(bijective), limit_(limit) {
    const auto w = a.window();
    assign_.resize(w + 1);
    used_.resize(w + 1);
    for (std::size_t n = 0; n <= w; ++n) {
      assign_[n].assign(a.size(n), kUnset);
      used_[n].assign(b.size(n), 0);
    }
    for (std::size_t n = w + 1; n-- > 0;) {
      for (Elem x = 0; x < a.size(n); ++x) order_.emplace_back(n, x);
    }
  }

  std::vector<std::vector<Table>> run() {
    if (a_.window() != b_.window()) return {};
    if (bijective_ && a_.sizes() != b_.sizes()) return {};
    search(0);
    return std::move(solutions_);
  }

 private:
  static constexpr Elem kUnset = static_cast<Elem>(-1);

  bool set(std::size_t n, Elem x, Elem y) {
    if (assign_[n][x] == y) return true;
    if (assign_[n][x] != kUnset) return false;
    if (bijective_ && used_[n][y]) return false;
    assign_[n][x] = y;
    used_[n][y] = 1;
    trail_.emplace_back(n, x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto [n, x] = trail_.back();
      trail_.pop_back();
      used_[n][assign_[n][x]] = 0;
      assign_[n][x] = kUnset;
    }
  }

  bool propagate(std::size_t n, Elem x, Elem y) {
    for (const auto& f : injections_into(n)) {
      if (!set(f.dom(), a_.table(f)[x], b_.table(f)[y])) return false;
    }
    return true;
  }

  void search(std::size_t idx) {
    if (solutions_.size() >= limit_) return;
    if (idx == order_.size()) {
      std::vector<Table> sol;
      for (const auto& level : assign_) sol.emplace_back(level.begin(), level.end());
      solutions_.push_back(std::move(sol));
      return;
    }
    auto [n, x] = order_[idx];
    if (assign_[n][x] != kUnset) {
      search(idx + 1);
      return;
    }
    for (Elem y = 0; y < b_.size(n) && solutions_.size() < limit_; ++y) {
      const auto mark = trail_.size();
      if (propagate(n, x, y)) search(idx + 1);
      undo(mark);
    }
  }

  const InjCoeff& a_;
  const InjCoeff& b_;
  bool bijective_;
  std::size_t limit_;
  std::vector<std::vector<Elem>> assign_;
  std::vector<std::vector<char>> used_;
  std::vector<std::pair<std::size_t, Elem>> order_;
  std::vector<std::pair<std::size_t, Elem>> trail_;
  std::vector<std::vector<Table>> solutions_;
};

}  // namespace

std::vector<std::vector<Table>> enumerate_inj_nats(const InjCoeff& a, const InjCoeff& b,
                                                   std::size_t limit) {
  return HomSearch(a, b, false, limit).run();
}

std::optional<std::vector<Table>> find_isomorphism(const InjCoeff& a, const InjCoeff& b) {
  auto found = HomSearch(a, b, true, 1).run();
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

// ---------------------------------------------------------------------------
// SurCoeff

struct SurCoeff::Memo {
  std::mutex mu;
  std::map<FinFun, Table> tables;
};

SurCoeff SurCoeff::tabulated(LevelNames sets, std::map<FinFun, Table> actions) {
  if (sets.empty()) throw Error(ErrorKind::Malformed, "coefficient functor needs at least level 0");
  const auto w = sets.size() - 1;
  for (std::size_t n = 0; n <= w; ++n) {
    for (std::size_t m = 0; m <= n; ++m) {
      for (const auto& s : enumerate(FunKind::Sur, n, m)) {
        auto it = actions.find(s);
        if (it == actions.end()) {
          throw Error(ErrorKind::Malformed, "missing table for surjection " + s.literal(), s.literal());
        }
        if (it->second.size() != sets[n].size() ||
            std::any_of(it->second.begin(), it->second.end(), [&](Elem v) { return v >= sets[m].size(); })) {
          throw Error(ErrorKind::Malformed, "bad table for surjection " + s.literal(), s.literal());
        }
      }
    }
  }
  SurCoeff b;
  b.kind_ = Kind::Tabulated;
  b.sets_ = std::move(sets);
  b.actions_ = std::move(actions);
  b.memo_ = std::make_shared<Memo>();
  return b;
}

SurCoeff SurCoeff::pplus() {
  SurCoeff b;
  b.kind_ = Kind::PPlus;
  b.memo_ = std::make_shared<Memo>();
  return b;
}

SurCoeff SurCoeff::identity() {
  SurCoeff b;
  b.kind_ = Kind::Identity;
  b.memo_ = std::make_shared<Memo>();
  return b;
}

std::string SurCoeff::name() const {
  switch (kind_) {
    case Kind::PPlus: return "pplus";
    case Kind::Identity: return "identity";
    case Kind::Tabulated: return "tabulated";
  }
  return "tabulated";
}

std::optional<std::size_t> SurCoeff::window() const {
  if (kind_ == Kind::Tabulated) return sets_.size() - 1;
  return std::nullopt;
}

std::size_t SurCoeff::size(std::size_t n) const {
  switch (kind_) {
    case Kind::PPlus: return n >= 1 ? 1 : 0;
    case Kind::Identity: return n == 1 ? 1 : 0;
    case Kind::Tabulated:
      if (n >= sets_.size()) {
        throw Error(ErrorKind::LevelUnavailable, "level " + std::to_string(n) + " is not tabulated", n);
      }
      return sets_[n].size();
  }
  return 0;
}

std::string SurCoeff::element_name(std::size_t n, Elem b) const {
  if (b >= size(n)) throw Error(ErrorKind::IndexOutOfRange, "no such element", {{"level", n}, {"element", b}});
  return kind_ == Kind::Tabulated ? sets_[n][b] : "*";
}

Elem SurCoeff::act(const FinFun& s, Elem b) const {
  if (!is_surjective(s)) throw Error(ErrorKind::NotSurjective, "not a surjection: " + s.literal(), s.literal());
  if (b >= size(s.dom())) {
    throw Error(ErrorKind::IndexOutOfRange, "element outside B_" + std::to_string(s.dom()),
                {{"level", s.dom()}, {"element", b}});
  }
  if (kind_ == Kind::Tabulated) {
    size(s.cod());
    return actions_.at(s)[b];
  }
  // Both rule variants have at most one element per level.
  return 0;
}

const Table& SurCoeff::table(const FinFun& s) const {
  if (!is_surjective(s)) throw Error(ErrorKind::NotSurjective, "not a surjection: " + s.literal(), s.literal());
  if (kind_ == Kind::Tabulated) {
    size(s.dom());
    return actions_.at(s);
  }
  std::lock_guard lock(memo_->mu);
  auto it = memo_->tables.find(s);
  if (it == memo_->tables.end()) {
    Table t(size(s.dom()));
    for (Elem b = 0; b < t.size(); ++b) t[b] = act(s, b);
    it = memo_->tables.emplace(s, std::move(t)).first;
  }
  return it->second;
}

Elem act_sur(const SurCoeff& b, const FinFun& s, Elem element) { return b.act(s, element); }

SurCoeff builtin_sur_coeff(const std::string& name) {
  if (name == "pplus") return SurCoeff::pplus();
  if (name == "identity") return SurCoeff::identity();
  throw Error(ErrorKind::Malformed, "unknown builtin semi-analytic coefficients '" + name + "'", name);
}

CheckReport validate_sur_coeff(const SurCoeff& b, std::size_t up_to_level) {
  const std::string name = "sur-coeff";
  for (std::size_t n = 0; n <= up_to_level; ++n) {
    const auto& id = b.table(FinFun::identity(n));
    for (Elem x = 0; x < id.size(); ++x) {
      if (id[x] != x) return CheckReport::fail(name, {{"law", "identity"}, {"level", n}, {"element", x}});
    }
    for (std::size_t m = 0; m <= n; ++m) {
      for (const auto& s : enumerate(FunKind::Sur, n, m)) {
        const auto& ts = b.table(s);
        for (std::size_t k = 0; k <= m; ++k) {
          for (const auto& s2 : enumerate(FunKind::Sur, m, k)) {
            const auto& t2 = b.table(s2);
            const auto& t21 = b.table(compose(s2, s));
            for (Elem x = 0; x < ts.size(); ++x) {
              if (t2[ts[x]] != t21[x]) {
                return CheckReport::fail(name, {{"law", "composition"},
                                                {"s", s.literal()},
                                                {"t", s2.literal()},
                                                {"element", b.element_name(n, x)}});
              }
            }
          }
        }
      }
    }
  }
  return CheckReport::pass(name);
}

}  // namespace cosan
