#include "crn/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace crn {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(Sym s, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.factors_.push_back({s, exp});
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [sym, exp] : factors) {
    if (exp == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == sym)
      m.factors_.back().second += exp;
    else
      m.factors_.push_back({sym, exp});
  }
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(Sym s) const {
  for (const auto& f : factors_)
    if (f.first == s) return f.second;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < other.factors_.size()) {
    if (factors_[i].first == other.factors_[j].first) {
      out.factors_.push_back({factors_[i].first, factors_[i].second + other.factors_[j].second});
      ++i, ++j;
    } else if (factors_[i].first < other.factors_[j].first) {
      out.factors_.push_back(factors_[i++]);
    } else {
      out.factors_.push_back(other.factors_[j++]);
    }
  }
  for (; i < factors_.size(); ++i) out.factors_.push_back(factors_[i]);
  for (; j < other.factors_.size(); ++j) out.factors_.push_back(other.factors_[j]);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  std::size_t j = 0;
  for (const auto& f : factors_) {
    while (j < other.factors_.size() && other.factors_[j].first < f.first) ++j;
    if (j >= other.factors_.size() || other.factors_[j].first != f.first ||
        other.factors_[j].second < f.second)
      return false;
  }
  return true;
}

Monomial Monomial::divide_by(const Monomial& divisor) const {
  Monomial out;
  std::size_t j = 0;
  for (const auto& f : factors_) {
    std::uint32_t sub = 0;
    if (j < divisor.factors_.size() && divisor.factors_[j].first == f.first)
      sub = divisor.factors_[j++].second;
    if (sub > f.second) throw std::logic_error("monomial division is not exact");
    if (f.second > sub) out.factors_.push_back({f.first, f.second - sub});
  }
  if (j != divisor.factors_.size())
    throw std::logic_error("monomial division is not exact");
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.factors_.size() && j < b.factors_.size()) {
    if (a.factors_[i].first == b.factors_[j].first) {
      out.factors_.push_back(
          {a.factors_[i].first, std::min(a.factors_[i].second, b.factors_[j].second)});
      ++i, ++j;
    } else if (a.factors_[i].first < b.factors_[j].first) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

bool Monomial::graded_lex_greater(const Monomial& other) const {
  const unsigned da = degree(), db = other.degree();
  if (da != db) return da > db;
  std::size_t i = 0, j = 0;
  while (i < factors_.size() && j < other.factors_.size()) {
    if (factors_[i].first == other.factors_[j].first) {
      if (factors_[i].second != other.factors_[j].second)
        return factors_[i].second > other.factors_[j].second;
      ++i, ++j;
    } else {
      // The earlier symbol has a positive exponent on exactly one side.
      return factors_[i].first < other.factors_[j].first;
    }
  }
  // Same degree and one factor list a prefix of the other forces equality.
  return false;
}

// ---------------------------------------------------------------------------
// Poly

namespace {
struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.graded_lex_greater(b);
  }
};
}  // namespace

Poly Poly::constant(Rational c) {
  return term(std::move(c), Monomial{});
}

Poly Poly::symbol(Sym s, std::uint32_t exp) {
  return term(1, Monomial::of(s, exp));
}

Poly Poly::term(Rational c, Monomial m) {
  Poly p;
  if (c != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, MonoGreater> acc;
  for (auto& t : terms) acc[std::move(t.mono)] += t.coeff;
  Poly p;
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) p.terms_.push_back({mono, coeff});
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_unit() && terms_[0].coeff == 1;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw std::logic_error("leading term of the zero polynomial");
  return terms_.front();
}

bool Poly::is_s_positive() const {
  if (terms_.empty()) return false;
  for (const auto& t : terms_)
    if (sign(t.coeff) < 0) return false;
  return true;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Poly::degree_in(Sym s) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(s));
  return d;
}

void Poly::collect_symbols(std::set<Sym>& out) const {
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) out.insert(f.first);
}

std::set<Sym> Poly::symbols() const {
  std::set<Sym> out;
  collect_symbols(out);
  return out;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Poly Poly::operator+(const Poly& other) const {
  Poly out;
  out.terms_.reserve(terms_.size() + other.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    if (terms_[i].mono == other.terms_[j].mono) {
      Rational c = terms_[i].coeff + other.terms_[j].coeff;
      if (c != 0) out.terms_.push_back({terms_[i].mono, std::move(c)});
      ++i, ++j;
    } else if (terms_[i].mono.graded_lex_greater(other.terms_[j].mono)) {
      out.terms_.push_back(terms_[i++]);
    } else {
      out.terms_.push_back(other.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) out.terms_.push_back(other.terms_[j]);
  return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  std::map<Monomial, Rational, MonoGreater> acc;
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) acc[a.mono * b.mono] += a.coeff * b.coeff;
  Poly p;
  for (auto& [mono, coeff] : acc)
    if (coeff != 0) p.terms_.push_back({mono, coeff});
  return p;
}

Poly& Poly::operator+=(const Poly& other) { return *this = *this + other; }
Poly& Poly::operator-=(const Poly& other) { return *this = *this - other; }
Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return {};
  Poly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly out = one();
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) out *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return out;
}

Rational Poly::eval(const std::function<Rational(Sym)>& assignment) const {
  Rational acc = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (const auto& [sym, exp] : t.mono.factors())
      v *= crn::pow(assignment(sym), exp);
    acc += v;
  }
  return acc;
}

Rational Poly::eval(const std::map<Sym, Rational>& assignment,
                    const SymbolTable& names) const {
  return eval([&](Sym s) -> Rational {
    auto it = assignment.find(s);
    if (it == assignment.end())
      throw std::out_of_range("no value assigned to symbol '" + names.name(s) + "'");
    return it->second;
  });
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero())
    throw std::invalid_argument("division by the zero polynomial");
  Poly quotient;
  Poly rem = *this;
  const Term& dlead = divisor.leading();
  while (!rem.is_zero()) {
    const Term& rlead = rem.leading();
    if (!dlead.mono.divides(rlead.mono)) return std::nullopt;
    Poly t = term(rlead.coeff / dlead.coeff, rlead.mono.divide_by(dlead.mono));
    quotient += t;
    rem -= t * divisor;
  }
  return quotient;
}

Rational Poly::content() const {
  Rational g = 0;
  for (const auto& t : terms_) g = rational_gcd(g, t.coeff);
  return g;
}

Monomial Poly::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial g = terms_[0].mono;
  for (std::size_t i = 1; i < terms_.size() && !g.is_unit(); ++i)
    g = Monomial::gcd(g, terms_[i].mono);
  return g;
}

Poly Poly::primitive_part() const {
  if (is_zero()) return {};
  Rational c = content();
  if (sign(leading().coeff) < 0) c = -c;
  const Monomial m = monomial_content();
  Poly out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    out.terms_.push_back({t.mono.divide_by(m), t.coeff / c});
  return out;
}

// ---------------------------------------------------------------------------
// Text serialization

namespace {

std::string render_abs_coeff(const Rational& c) {
  Rational a = abs(c);
  return a.get_str();
}

void render_term(std::string& out, const Term& t, const SymbolTable& names,
                 bool first) {
  const bool negative = sign(t.coeff) < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  const Rational a = abs(t.coeff);
  bool emitted = false;
  if (t.mono.is_unit() || a != 1) {
    out += render_abs_coeff(t.coeff);
    emitted = true;
  }
  for (const auto& [sym, exp] : t.mono.factors()) {
    if (emitted) out += "*";
    out += names.name(sym);
    if (exp != 1) {
      out += "^";
      out += std::to_string(exp);
    }
    emitted = true;
  }
}

}  // namespace

std::string to_text(const Poly& p, const SymbolTable& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    render_term(out, t, names, first);
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text parsing

namespace {

struct PolyLexer {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial syntax error at offset " +
                                std::to_string(pos) + ": " + what);
  }
  std::string number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected a number");
    return std::string(text.substr(start, pos - start));
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= text.size() ||
        !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      fail("expected a symbol name");
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
};

}  // namespace

Poly poly_from_text(std::string_view text, const SymbolTable& names) {
  PolyLexer lex{text};
  std::vector<Term> terms;

  lex.skip_ws();
  if (lex.eof()) lex.fail("empty polynomial");

  bool first = true;
  while (!lex.eof()) {
    int s = 1;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      s = (c == '-') ? -1 : 1;
      ++lex.pos;
    } else if (!first) {
      lex.fail("expected '+' or '-' between terms");
    }

    Rational coeff = s;
    Monomial mono;
    bool expect_factor = true;
    while (expect_factor) {
      char f = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(f))) {
        std::string num = lex.number();
        std::string den = "1";
        if (lex.peek() == '/') {
          ++lex.pos;
          den = lex.number();
        }
        coeff *= parse_rational(num + "/" + den);
      } else {
        std::string id = lex.name();
        auto sym = names.lookup(id);
        if (!sym) lex.fail("unknown symbol '" + id + "'");
        std::uint32_t exp = 1;
        if (lex.peek() == '^') {
          ++lex.pos;
          exp = static_cast<std::uint32_t>(std::stoul(lex.number()));
        }
        mono = mono * Monomial::of(*sym, exp);
      }
      if (lex.peek() == '*') {
        ++lex.pos;
      } else {
        expect_factor = false;
      }
    }
    terms.push_back({std::move(mono), std::move(coeff)});
    first = false;
  }
  return Poly::from_terms(std::move(terms));
}

}  // namespace crn
