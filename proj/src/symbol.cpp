#include "crn/symbol.hpp"

#include <stdexcept>

namespace crn {

Sym SymbolTable::add(SymKind kind, std::string name) {
  if (index_.contains(name))
    throw std::invalid_argument("duplicate symbol name '" + name + "'");
  auto& pool = names_[static_cast<std::size_t>(kind)];
  Sym s{kind, static_cast<std::uint32_t>(pool.size())};
  index_.emplace(name, s);
  pool.push_back(std::move(name));
  return s;
}

Sym SymbolTable::fresh(SymKind kind, const std::string& base) {
  if (!index_.contains(base)) return add(kind, base);
  for (unsigned n = 2;; ++n) {
    std::string candidate = base + "_" + std::to_string(n);
    if (!index_.contains(candidate)) return add(kind, candidate);
  }
}

const std::string& SymbolTable::name(Sym s) const {
  const auto& pool = names_[static_cast<std::size_t>(s.kind)];
  if (s.id >= pool.size()) throw std::out_of_range("symbol id out of range");
  return pool[s.id];
}

std::optional<Sym> SymbolTable::lookup(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SymbolTable::count(SymKind kind) const {
  return names_[static_cast<std::size_t>(kind)].size();
}

}  // namespace crn
