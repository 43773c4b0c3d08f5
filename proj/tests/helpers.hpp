#pragma once

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>

#include "crn/eliminate.hpp"
#include "crn/network.hpp"
#include "crn/poly.hpp"
#include "crn/ratfn.hpp"
#include "crn/stoich.hpp"

namespace testutil {

using namespace crn;

// ---------------------------------------------------------------------------
// Networks used across the suite.

inline const char* kMainExample = R"(species: S1 S2 S3 S4 S5 S6 S7 S8 S9
r1:  S1 + S2 -> S4
r2:  S4 -> S1 + S2
r3:  S1 + S3 -> S5
r4:  S5 -> S1 + S3
r5:  S3 + S4 -> S6
r6:  S6 -> S3 + S4
r7:  S2 + S5 -> S6
r8:  S6 -> S2 + S5
r9:  S6 -> S1 + S7
r10: S7 + S8 -> S9
r11: S9 -> S7 + S8
r12: S9 -> S2 + S3 + S8
)";

inline const char* kIntroExample = R"(species: A B C D E
r1: A + 2 B -> D
r2: D -> A + C
r3: C + D -> E
r4: E -> A + B
)";

// Two terminal strong linkage classes inside one linkage class.
inline const char* kTwoTerminal = R"(r1: S1 -> S2
r2: S1 -> S3
r3: S2 + S3 -> 2 S1
)";

// No semiflows at all.
inline const char* kRemarkSix = R"(species: S1 S2 S3 S4 S5 S6
r1: S1 -> S2
r2: S2 -> S3
r3: S1 + S2 + S3 -> S6
r4: S4 + S5 -> S6
r5: S4 -> S5
r6: S5 -> S1
)";

// kRemarkSix without the last reaction: exactly one P-semiflow.
inline const char* kRemarkFive = R"(species: S1 S2 S3 S4 S5 S6
r1: S1 -> S2
r2: S2 -> S3
r3: S1 + S2 + S3 -> S6
r4: S4 + S5 -> S6
r5: S4 -> S5
)";

// No basis of P-semiflows exists.
inline const char* kNoPositive = R"(species: A B C
r1: A + B + C -> A
)";

inline const char* kReversiblePair = R"(r1: A <=> B
)";

// Same species graph for both (stoichiometry differs).
inline const char* kSystemR1 = R"(r1: A + B -> 2 C
r2: C -> A
)";
inline const char* kSystemR2 = R"(r1: A + B -> C
r2: C -> A
)";

// Three-species loop with a side conversion; reduced system solvable by hand.
inline const char* kTriangle = R"(species: A B C
r1: A -> B
r2: B -> A
r3: B -> C
r4: C -> A
)";

inline Crn main_example() { return Crn::parse_text(kMainExample, "main.crn"); }
inline Crn intro_example() { return Crn::parse_text(kIntroExample, "intro.crn"); }

// ---------------------------------------------------------------------------
// Polynomial-building shorthand bound to one network's symbols.

struct PolyBuilder {
  const Crn& crn;

  Poly k(unsigned i) const {
    auto r = crn.reaction_index("r" + std::to_string(i));
    REQUIRE(r);
    return Poly::symbol(crn.rate(*r));
  }
  Poly kname(const std::string& label) const {
    auto r = crn.reaction_index(label);
    REQUIRE(r);
    return Poly::symbol(crn.rate(*r));
  }
  Poly c(unsigned i) const {
    return cn("S" + std::to_string(i));
  }
  Poly cn(const std::string& species) const {
    return Poly::symbol(crn.conc(crn.require_species(species)));
  }
  Poly n(long v) const { return Poly::constant(v); }
};

// ---------------------------------------------------------------------------
// Randomized inputs.

struct RandomPolys {
  std::mt19937_64 rng;
  std::vector<Sym> syms;

  explicit RandomPolys(std::uint64_t seed, std::vector<Sym> symbols)
      : rng(seed), syms(std::move(symbols)) {}

  Rational coeff() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    long n = num(rng);
    if (n == 0) n = 1;
    return make_rational(n, den(rng));
  }

  Monomial monomial(unsigned max_vars = 3, unsigned max_exp = 3) {
    std::uniform_int_distribution<unsigned> var_count(0, max_vars);
    std::uniform_int_distribution<std::size_t> pick(0, syms.size() - 1);
    std::uniform_int_distribution<unsigned> exp(1, max_exp);
    std::vector<Monomial::Factor> fs;
    const unsigned n = var_count(rng);
    for (unsigned i = 0; i < n; ++i) fs.push_back({syms[pick(rng)], exp(rng)});
    return Monomial::from_factors(std::move(fs));
  }

  Poly poly(unsigned max_terms = 4, unsigned max_vars = 3, unsigned max_exp = 3) {
    std::uniform_int_distribution<unsigned> term_count(0, max_terms);
    std::vector<Term> ts;
    const unsigned n = term_count(rng);
    for (unsigned i = 0; i < n; ++i)
      ts.push_back({monomial(max_vars, max_exp), coeff()});
    return Poly::from_terms(std::move(ts));
  }

  Rational positive_rational(long hi = 1000) {
    std::uniform_int_distribution<long> d(1, hi);
    return make_rational(d(rng), d(rng));
  }
};

inline std::map<Sym, Rational> random_positive_assignment(const Crn& crn,
                                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(1, 1000);
  std::map<Sym, Rational> out;
  for (std::uint32_t r = 0; r < crn.reaction_count(); ++r)
    out[crn.rate(r)] = make_rational(d(rng), d(rng));
  for (std::uint32_t i = 0; i < crn.species_count(); ++i)
    out[crn.conc(i)] = make_rational(d(rng), d(rng));
  for (std::uint32_t id = 0; id < crn.symbols().count(SymKind::TotalAmount); ++id)
    out[Sym{SymKind::TotalAmount, id}] = make_rational(d(rng), d(rng));
  return out;
}

// Species indices by name, e.g. ids(crn, {"S1","S4"}).
inline std::vector<std::uint32_t> ids(const Crn& crn, std::initializer_list<const char*> names) {
  std::vector<std::uint32_t> out;
  for (const char* n : names) out.push_back(crn.require_species(n));
  std::sort(out.begin(), out.end());
  return out;
}

inline RatVec vec(const Crn& crn, std::initializer_list<std::pair<const char*, long>> entries) {
  RatVec v(crn.species_count(), 0);
  for (const auto& [name, value] : entries) v[crn.require_species(name)] = value;
  return v;
}

}  // namespace testutil
