#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crn/poly.hpp"
#include "crn/symbol.hpp"

namespace crn {

// Input file is malformed: carries 1-based line/column of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string source, unsigned line, unsigned column, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + what),
        source_(std::move(source)),
        line_(line),
        column_(column) {}

  const std::string& source() const { return source_; }
  unsigned line() const { return line_; }
  unsigned column() const { return column_; }

 private:
  std::string source_;
  unsigned line_, column_;
};

// A request is structurally valid but rejected by the theory (interacting
// subset, missing total amount, ...). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formal non-negative integer combination of species; the empty combination
// is the zero complex (inflow/outflow).
struct Complex {
  // (species index, coefficient >= 1), sorted by species index.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;

  std::uint32_t coefficient(std::uint32_t species) const;
  bool involves(std::uint32_t species) const { return coefficient(species) > 0; }
  bool is_zero() const { return entries.empty(); }

  friend bool operator==(const Complex&, const Complex&) = default;
};

struct Reaction {
  std::string label;
  std::uint32_t initial;   // complex index
  std::uint32_t terminal;  // complex index
  Sym rate;
};

// Species, complexes and reactions of one network, plus its symbol
// namespace. Immutable after parse, except that total-amount symbols may be
// appended (monotonic; no existing symbol ever changes).
class Crn {
 public:
  static Crn parse_text(std::string_view text, std::string source_name = "<input>");
  static Crn parse_file(const std::string& path);
  std::string serialize() const;

  std::size_t species_count() const { return species_.size(); }
  std::size_t complex_count() const { return complexes_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }

  const std::string& species_name(std::uint32_t i) const { return species_.at(i); }
  std::optional<std::uint32_t> species_index(std::string_view name) const;
  std::uint32_t require_species(std::string_view name) const;  // DomainError if unknown
  const Complex& complex(std::uint32_t i) const { return complexes_.at(i); }
  const Reaction& reaction(std::uint32_t r) const { return reactions_.at(r); }
  std::optional<std::uint32_t> reaction_index(std::string_view label) const;

  const SymbolTable& symbols() const { return symtab_; }
  Sym conc(std::uint32_t species) const { return {SymKind::Conc, species}; }
  Sym rate(std::uint32_t r) const { return reactions_.at(r).rate; }
  Sym ensure_total(const std::string& name);
  Sym fresh_total(const std::string& base);

  // Species relations (speaking about complexes of this network only).
  bool interacts(std::uint32_t i, std::uint32_t j) const;
  bool produces(std::uint32_t i, std::uint32_t j) const;
  bool ultimately_produces(std::uint32_t i, std::uint32_t j) const;
  // Intermediate species of the production chain must lie in `via`
  // (endpoints are unconstrained).
  bool ultimately_produces_via(std::uint32_t i, std::uint32_t j,
                               const std::vector<std::uint32_t>& via) const;

  // Partition of complex indices under the symmetric-transitive closure of
  // "reacts to"; classes ordered by smallest member.
  std::vector<std::vector<std::uint32_t>> linkage_classes() const;
  // Strongly connected components of the complex digraph.
  std::vector<std::vector<std::uint32_t>> strong_linkage_classes() const;
  // True iff every linkage class contains exactly one terminal strong
  // linkage class (the structural condition under which all conservation
  // laws come from semiflows).
  bool terminal_strong_linkage_check() const;

  // Mass action: the monomial c^y of a complex, and the steady-state
  // polynomial sum_r k_r c^{y(r)} (y'_i(r) - y_i(r)) of a species.
  Monomial complex_monomial(std::uint32_t ci) const;
  Poly steady_state_poly(std::uint32_t species) const;
  std::vector<Poly> steady_state_polys() const;

  bool structurally_equal(const Crn& other) const;

 private:
  friend class CrnParser;

  std::uint32_t intern_complex(Complex c);

  std::vector<std::string> species_;
  std::vector<Complex> complexes_;
  std::vector<Reaction> reactions_;
  SymbolTable symtab_;
};

}  // namespace crn
