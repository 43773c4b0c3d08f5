#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace crn {

// The symbol namespace is partitioned: rate constants (one per reaction),
// concentrations (one per species), total amounts (one per selected
// conservation law). The kind order fixes the term order of polynomials.
enum class SymKind : std::uint8_t { RateConst = 0, Conc = 1, TotalAmount = 2 };

struct Sym {
  SymKind kind{SymKind::RateConst};
  std::uint32_t id{0};

  friend constexpr auto operator<=>(const Sym&, const Sym&) = default;
};

// Names for the symbols of one network context. ids are dense per kind.
class SymbolTable {
 public:
  // Registers a new symbol; throws std::invalid_argument on duplicate name.
  Sym add(SymKind kind, std::string name);

  // Registers `base` if unused, otherwise base_2, base_3, ...
  Sym fresh(SymKind kind, const std::string& base);

  const std::string& name(Sym s) const;
  std::optional<Sym> lookup(std::string_view name) const;
  std::size_t count(SymKind kind) const;

 private:
  std::array<std::vector<std::string>, 3> names_;
  std::map<std::string, Sym, std::less<>> index_;
};

}  // namespace crn
