#include "crn/rational.hpp"

#include <stdexcept>

namespace crn {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      Integer num{std::string(text)};
      return Rational(num);
    }
    Integer num{std::string(text.substr(0, slash))};
    Integer den{std::string(text.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q;
    q.get_num() = num;
    q.get_den() = den;
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& q, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num().get_mpz_t(), q.get_num().get_mpz_t(), e);
  mpz_pow_ui(r.get_den().get_mpz_t(), q.get_den().get_mpz_t(), e);
  // num/den coprime implies num^e/den^e coprime; no canonicalize needed.
  return r;
}

Rational rational_gcd(const Rational& a, const Rational& b) {
  Integer g, l;
  mpz_gcd(g.get_mpz_t(), a.get_num().get_mpz_t(), b.get_num().get_mpz_t());
  mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
  if (l == 0) l = 1;
  Rational q;
  q.get_num() = g;
  q.get_den() = l;
  q.canonicalize();
  return q;
}

}  // namespace crn
