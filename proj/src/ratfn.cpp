#include "crn/ratfn.hpp"

#include <stdexcept>

namespace crn {

RatFn RatFn::of(Poly num, Poly den) {
  if (den.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  RatFn f(std::move(num), std::move(den));
  f.normalize();
  return f;
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::one();
    return;
  }
  const Monomial m = Monomial::gcd(num_.monomial_content(), den_.monomial_content());
  if (!m.is_unit()) {
    auto divide_monomials = [&](const Poly& p) {
      std::vector<Term> ts;
      ts.reserve(p.term_count());
      for (const auto& t : p.terms()) ts.push_back({t.mono.divide_by(m), t.coeff});
      return Poly::from_terms(std::move(ts));
    };
    num_ = divide_monomials(num_);
    den_ = divide_monomials(den_);
  }
  Rational scale = rational_gcd(num_.content(), den_.content());
  if (sign(den_.leading().coeff) < 0) scale = -scale;
  num_ = num_.scaled(1 / scale);
  den_ = den_.scaled(1 / scale);
}

RatFn RatFn::operator-() const { return of(-num_, den_); }

RatFn RatFn::operator+(const RatFn& other) const {
  if (den_ == other.den_) return of(num_ + other.num_, den_);
  return of(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RatFn RatFn::operator-(const RatFn& other) const { return *this + (-other); }

RatFn RatFn::operator*(const RatFn& other) const {
  return of(num_ * other.num_, den_ * other.den_);
}

RatFn RatFn::operator/(const RatFn& other) const {
  if (other.is_zero()) throw std::invalid_argument("division by the zero rational function");
  return of(num_ * other.den_, den_ * other.num_);
}

Rational RatFn::eval(const std::function<Rational(Sym)>& assignment) const {
  const Rational d = den_.eval(assignment);
  if (d == 0) throw std::domain_error("rational function denominator vanished");
  return num_.eval(assignment) / d;
}

std::string to_text(const RatFn& f, const SymbolTable& names) {
  if (f.is_polynomial()) {
    if (f.den().is_one()) return to_text(f.num(), names);
    return "(" + to_text(f.num(), names) + ")/" + to_text(f.den(), names);
  }
  return "(" + to_text(f.num(), names) + ")/(" + to_text(f.den(), names) + ")";
}

}  // namespace crn
