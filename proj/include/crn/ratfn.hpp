#pragma once

#include <string>

#include "crn/poly.hpp"

namespace crn {

// Quotient of two polynomials. The stored pair is reduced by the common
// monomial divisor and by rational content (denominator made primitive with
// positive leading coefficient); full multivariate gcd reduction is out of
// scope, so equality is decided by cross-multiplication.
class RatFn {
 public:
  RatFn() : num_(Poly::zero()), den_(Poly::one()) {}

  static RatFn of(Poly num, Poly den);
  static RatFn from_poly(Poly p) { return of(std::move(p), Poly::one()); }
  static RatFn zero() { return {}; }
  static RatFn one() { return from_poly(Poly::one()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  // Nonzero quotient of two S-positive polynomials (in the stored form).
  bool is_s_positive() const { return num_.is_s_positive() && den_.is_s_positive(); }

  RatFn operator-() const;
  RatFn operator+(const RatFn& other) const;
  RatFn operator-(const RatFn& other) const;
  RatFn operator*(const RatFn& other) const;
  RatFn operator/(const RatFn& other) const;  // throws on division by zero

  bool equals(const RatFn& other) const {
    return num_ * other.den_ == other.num_ * den_;
  }

  // Exact value; throws std::domain_error if the denominator vanishes.
  Rational eval(const std::function<Rational(Sym)>& assignment) const;

  void collect_symbols(std::set<Sym>& out) const {
    num_.collect_symbols(out);
    den_.collect_symbols(out);
  }

 private:
  RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  Poly num_, den_;
};

std::string to_text(const RatFn& f, const SymbolTable& names);

}  // namespace crn
