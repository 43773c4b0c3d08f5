#include <doctest.h>

#include "crn/io.hpp"
#include "crn/poly.hpp"
#include "crn/ratfn.hpp"
#include "helpers.hpp"

using namespace crn;
using testutil::PolyBuilder;
using testutil::RandomPolys;

namespace {

SymbolTable scratch_symbols() {
  SymbolTable t;
  for (int i = 0; i < 4; ++i) t.add(SymKind::RateConst, "k" + std::to_string(i + 1));
  for (int i = 0; i < 4; ++i) t.add(SymKind::Conc, "x" + std::to_string(i + 1));
  t.add(SymKind::TotalAmount, "w");
  return t;
}

std::vector<Sym> all_syms(const SymbolTable& t) {
  std::vector<Sym> out;
  for (std::uint32_t i = 0; i < t.count(SymKind::RateConst); ++i)
    out.push_back({SymKind::RateConst, i});
  for (std::uint32_t i = 0; i < t.count(SymKind::Conc); ++i)
    out.push_back({SymKind::Conc, i});
  for (std::uint32_t i = 0; i < t.count(SymKind::TotalAmount); ++i)
    out.push_back({SymKind::TotalAmount, i});
  return out;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK(to_string(make_rational(7, -14)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(rational_gcd(make_rational(4, 3), make_rational(2, 9)) == make_rational(2, 9));
}

TEST_CASE("poly arithmetic identities") {
  auto crn = testutil::main_example();
  PolyBuilder P{crn};

  SUBCASE("additive identity") {
    const Poly p = P.k(1) * P.c(2);
    CHECK(p + Poly::zero() == p);
  }
  SUBCASE("difference of squares") {
    const Poly lhs = (P.c(2) + P.c(3)) * (P.c(2) - P.c(3));
    const Poly rhs = P.c(2) * P.c(2) - P.c(3) * P.c(3);
    CHECK(lhs == rhs);
  }
  SUBCASE("direct rational evaluation oracle") {
    // (k2 + k3 cC) cD at k2=1, k3=2, cC=3, cD=5 -> (1 + 6) * 5 = 35.
    auto intro = testutil::intro_example();
    PolyBuilder I{intro};
    const Poly p = (I.k(2) + I.k(3) * I.cn("C")) * I.cn("D");
    std::map<Sym, Rational> a{{intro.rate(1), 1},
                              {intro.rate(2), 2},
                              {intro.conc(intro.require_species("C")), 3},
                              {intro.conc(intro.require_species("D")), 5}};
    CHECK(p.eval(a, intro.symbols()) == 35);
  }
}

TEST_CASE("ring axioms on randomized triples") {
  SymbolTable t = scratch_symbols();
  RandomPolys gen(20240817, all_syms(t));
  for (int iter = 0; iter < 200; ++iter) {
    const Poly a = gen.poly(), b = gen.poly(), c = gen.poly();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly::zero());
    CHECK(a * Poly::one() == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  SymbolTable t = scratch_symbols();
  RandomPolys gen(987654321, all_syms(t));
  for (int iter = 0; iter < 100; ++iter) {
    const Poly a = gen.poly(), b = gen.poly(), c = gen.poly();
    std::map<Sym, Rational> point;
    for (auto s : all_syms(t)) point[s] = gen.coeff();
    auto at = [&](const Poly& p) { return p.eval(point, t); };
    CHECK(at(a * b + c) == at(a) * at(b) + at(c));
  }
}

TEST_CASE("eval reports missing symbols") {
  SymbolTable t = scratch_symbols();
  const Poly p = Poly::symbol({SymKind::Conc, 0});
  std::map<Sym, Rational> empty;
  CHECK_THROWS_AS(p.eval(empty, t), std::out_of_range);
}

TEST_CASE("S-positivity") {
  auto crn = testutil::main_example();
  PolyBuilder P{crn};
  CHECK((P.k(1) * P.c(2) + P.k(2)).is_s_positive());
  CHECK_FALSE(Poly::zero().is_s_positive());
  CHECK_FALSE((P.k(1) * P.c(2) - P.k(2) * P.c(3)).is_s_positive());

  SUBCASE("positive evaluation of S-positive polynomials") {
    SymbolTable t = scratch_symbols();
    RandomPolys gen(55, all_syms(t));
    for (int iter = 0; iter < 100; ++iter) {
      Poly p = gen.poly();
      // Flip all coefficients positive to force S-positivity.
      std::vector<Term> ts;
      for (const auto& term : p.terms()) ts.push_back({term.mono, abs(term.coeff)});
      p = Poly::from_terms(ts);
      if (p.is_zero()) continue;
      std::map<Sym, Rational> point;
      for (auto s : all_syms(t)) point[s] = gen.positive_rational();
      CHECK(sign(p.eval(point, t)) > 0);
    }
  }
}

TEST_CASE("graded lex canonical order is deterministic") {
  SymbolTable t = scratch_symbols();
  const Sym k1{SymKind::RateConst, 0}, x1{SymKind::Conc, 0};
  const Poly p = Poly::symbol(x1) + Poly::symbol(k1) + Poly::symbol(x1, 2);
  // Degree first, then RateConst before Conc.
  REQUIRE(p.term_count() == 3);
  CHECK(p.terms()[0].mono == Monomial::of(x1, 2));
  CHECK(p.terms()[1].mono == Monomial::of(k1));
  CHECK(p.terms()[2].mono == Monomial::of(x1));
}

TEST_CASE("exact division") {
  SymbolTable t = scratch_symbols();
  RandomPolys gen(777, all_syms(t));
  int nontrivial = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const Poly a = gen.poly(), b = gen.poly();
    if (b.is_zero()) continue;
    const Poly prod = a * b;
    auto q = prod.divide_exact(b);
    REQUIRE(q);
    CHECK(*q == a);
    if (!a.is_zero()) ++nontrivial;
  }
  CHECK(nontrivial > 100);
  // Inexact division is reported, not rounded.
  auto crn = testutil::main_example();
  PolyBuilder Q{crn};
  CHECK_FALSE((Q.c(2) + Q.n(1)).divide_exact(Q.c(3)));
  CHECK_THROWS_AS(Q.c(2).divide_exact(Poly::zero()), std::invalid_argument);
}

TEST_CASE("text round-trip is the identity") {
  auto crn = testutil::main_example();
  SUBCASE("hand-written forms") {
    const std::string text = "k_r1*c_S2^2 + 3/2*k_r4";
    const Poly p = poly_from_text(text, crn.symbols());
    CHECK(to_text(p, crn.symbols()) == text);
  }
  SUBCASE("randomized") {
    SymbolTable t = scratch_symbols();
    RandomPolys gen(31337, all_syms(t));
    for (int iter = 0; iter < 200; ++iter) {
      const Poly p = gen.poly();
      const std::string text = to_text(p, t);
      const Poly q = poly_from_text(text, t);
      CHECK(q == p);
      CHECK(to_text(q, t) == text);
    }
  }
  SUBCASE("parse errors") {
    CHECK_THROWS_AS(poly_from_text("k_r1 + + c_S2", crn.symbols()), std::invalid_argument);
    CHECK_THROWS_AS(poly_from_text("nope", crn.symbols()), std::invalid_argument);
  }
}

TEST_CASE("json round-trip is the identity") {
  SymbolTable t = scratch_symbols();
  RandomPolys gen(4242, all_syms(t));
  for (int iter = 0; iter < 100; ++iter) {
    const Poly p = gen.poly();
    const Json j = poly_to_json(p, t);
    CHECK(poly_from_json(j, t) == p);
  }
}

TEST_CASE("rational functions") {
  auto crn = testutil::main_example();
  PolyBuilder P{crn};

  SUBCASE("monomial-content reduction") {
    // k2 k4 cD / (k3 k4 cD) reduces to k2 / k3.
    auto intro = testutil::intro_example();
    PolyBuilder I{intro};
    const RatFn f = RatFn::of(I.k(2) * I.k(4) * I.cn("D"), I.k(3) * I.k(4) * I.cn("D"));
    CHECK(f.num() == I.k(2));
    CHECK(f.den() == I.k(3));
  }
  SUBCASE("arithmetic and equality by cross-multiplication") {
    const RatFn a = RatFn::of(P.c(2), P.k(1));
    const RatFn b = RatFn::of(P.c(3), P.k(2));
    const RatFn sum = a + b;
    CHECK(sum.equals(RatFn::of(P.c(2) * P.k(2) + P.c(3) * P.k(1), P.k(1) * P.k(2))));
    const RatFn prod = a * b;
    CHECK(prod.equals(RatFn::of(P.c(2) * P.c(3), P.k(1) * P.k(2))));
    CHECK((a / a).equals(RatFn::one()));
    CHECK_THROWS_AS(a / RatFn::zero(), std::invalid_argument);
  }
  SUBCASE("zero handling") {
    const RatFn z = RatFn::of(Poly::zero(), P.k(1));
    CHECK(z.is_zero());
    CHECK(z.den().is_one());
    CHECK_THROWS_AS(RatFn::of(P.k(1), Poly::zero()), std::invalid_argument);
  }
  SUBCASE("field axioms on random values") {
    SymbolTable t = scratch_symbols();
    RandomPolys gen(9090, all_syms(t));
    for (int iter = 0; iter < 60; ++iter) {
      Poly pn = gen.poly(), pd = gen.poly(), qn = gen.poly(), qd = gen.poly();
      if (pd.is_zero() || qd.is_zero()) continue;
      const RatFn p = RatFn::of(pn, pd), q = RatFn::of(qn, qd);
      CHECK((p + q).equals(q + p));
      CHECK((p * q).equals(q * p));
      CHECK((p - p).is_zero());
      std::map<Sym, Rational> point;
      for (auto s : all_syms(t)) point[s] = gen.positive_rational(7);
      auto lookup = [&](Sym s) { return point.at(s); };
      if (pd.eval(point, t) != 0 && qd.eval(point, t) != 0 &&
          (p + q).den().eval(point, t) != 0) {
        CHECK((p + q).eval(lookup) == p.eval(lookup) + q.eval(lookup));
      }
    }
  }
}
