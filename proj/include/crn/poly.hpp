#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crn/rational.hpp"
#include "crn/symbol.hpp"

namespace crn {

// Exponent vector of a monomial. Factors are sorted by symbol; stored
// exponents are >= 1, so the unit monomial has no factors.
class Monomial {
 public:
  using Factor = std::pair<Sym, std::uint32_t>;

  Monomial() = default;
  static Monomial of(Sym s, std::uint32_t exp = 1);
  static Monomial from_factors(std::vector<Factor> factors);

  bool is_unit() const { return factors_.empty(); }
  unsigned degree() const;
  std::uint32_t exponent(Sym s) const;
  const std::vector<Factor>& factors() const { return factors_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;  // this | other
  Monomial divide_by(const Monomial& divisor) const;  // requires divisor | this
  static Monomial gcd(const Monomial& a, const Monomial& b);

  // Graded lexicographic order: total degree first, ties broken by the
  // exponent of the smallest symbol (RateConst < Conc < TotalAmount, then id)
  // on which the monomials differ.
  bool graded_lex_greater(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

struct Term {
  Monomial mono;
  Rational coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

// Sparse multivariate polynomial over exact rationals, kept in canonical
// form: terms strictly descending in graded-lex order, no zero coefficients.
// Equal polynomials have identical representations, so operator== is
// structural equality of the term lists.
class Poly {
 public:
  Poly() = default;  // zero

  static Poly zero() { return {}; }
  static Poly one() { return constant(1); }
  static Poly constant(Rational c);
  static Poly symbol(Sym s, std::uint32_t exp = 1);
  static Poly term(Rational c, Monomial m);
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;  // requires nonzero

  // Nonzero with every coefficient >= 0.
  bool is_s_positive() const;

  unsigned total_degree() const;  // 0 for the zero polynomial
  std::uint32_t degree_in(Sym s) const;
  void collect_symbols(std::set<Sym>& out) const;
  std::set<Sym> symbols() const;
  bool contains(Sym s) const { return degree_in(s) > 0; }

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly scaled(const Rational& c) const;
  Poly pow(std::uint32_t e) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  // Exact evaluation. The callable must return the value of every symbol
  // that occurs; the map overload throws std::out_of_range naming the
  // symbol missing from the assignment.
  Rational eval(const std::function<Rational(Sym)>& assignment) const;
  Rational eval(const std::map<Sym, Rational>& assignment,
                const SymbolTable& names) const;

  // Exact polynomial division: returns q with *this == q * divisor, or
  // nullopt if no such polynomial exists. Throws std::invalid_argument when
  // divisor is zero.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // gcd of the |coefficients| (a positive rational); 0 for the zero poly.
  Rational content() const;
  // Common monomial divisor of all terms; unit for the zero poly.
  Monomial monomial_content() const;
  // Divides out content and monomial content; sign chosen so the leading
  // coefficient is positive. Zero stays zero.
  Poly primitive_part() const;

 private:
  std::vector<Term> terms_;
};

// Human-readable form, e.g. "k_r1*c_S2^2 + 3/2*k_r4". Round-trips through
// poly_from_text bit-exactly.
std::string to_text(const Poly& p, const SymbolTable& names);
Poly poly_from_text(std::string_view text, const SymbolTable& names);

}  // namespace crn
