#include "cosan/tabulated.hpp"

#include <algorithm>

#include "cosan/error.hpp"

namespace cosan {

std::vector<FinFun> window_functions(std::size_t w, FunKind kind) {
  std::vector<FinFun> out;
  for (std::size_t m = 0; m <= w; ++m) {
    for (std::size_t n = 0; n <= w; ++n) {
      auto fs = enumerate(kind, m, n);
      out.insert(out.end(), std::make_move_iterator(fs.begin()), std::make_move_iterator(fs.end()));
    }
  }
  return out;
}

TabFunctor::TabFunctor(LevelNames sets, std::map<FinFun, Table> tables)
    : sets_(std::move(sets)), tables_(std::move(tables)) {
  if (sets_.empty()) throw Error(ErrorKind::Malformed, "tabulated functor needs at least level 0");
  const auto w = window();
  if (tables_.size() != window_functions(w).size()) {
    throw Error(ErrorKind::Malformed, "tabulated functor needs exactly one table per window function");
  }
  for (const auto& [f, t] : tables_) {
    if (f.dom() > w || f.cod() > w) {
      throw Error(ErrorKind::Malformed, "table for a function outside the window: " + f.literal(), f.literal());
    }
    const auto from = sets_[f.cod()].size();
    const auto to = sets_[f.dom()].size();
    if (t.size() != from || std::any_of(t.begin(), t.end(), [&](Elem v) { return v >= to; })) {
      throw Error(ErrorKind::Malformed, "table of " + f.literal() + " is not a total map", f.literal());
    }
  }
}

std::vector<std::size_t> TabFunctor::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& s : sets_) out.push_back(s.size());
  return out;
}

const Table& TabFunctor::table(const FinFun& f) const {
  auto it = tables_.find(f);
  if (it == tables_.end()) {
    throw Error(ErrorKind::OutOfWindow, "no table for " + f.literal(), f.literal());
  }
  return it->second;
}

FinFun TabFunctor::map(const FinFun& f) const { return table_fun(table(f), size(f.dom())); }

}  // namespace cosan
