#include <doctest.h>

#include "crn/polymatrix.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace crn;
using testutil::PolyBuilder;
using testutil::RandomPolys;

namespace {

std::vector<Sym> small_syms() {
  return {{SymKind::RateConst, 0}, {SymKind::RateConst, 1}, {SymKind::Conc, 0},
          {SymKind::Conc, 1}};
}

}  // namespace

TEST_CASE("fraction-free determinant basics") {
  auto crn = testutil::main_example();
  PolyBuilder P{crn};

  SUBCASE("1x1") {
    PolyMatrix m(1, 1);
    m.at(0, 0) = P.k(1);
    CHECK(det_fraction_free(m) == P.k(1));
  }
  SUBCASE("dependent columns") {
    PolyMatrix m(2, 2);
    m.at(0, 0) = -P.k(2);
    m.at(0, 1) = P.k(1) * P.c(2);
    m.at(1, 0) = P.k(2);
    m.at(1, 1) = -(P.k(1) * P.c(2));
    CHECK(det_fraction_free(m) == Poly::zero());
  }
  SUBCASE("intro example 3x3 has rank 2") {
    auto intro = testutil::intro_example();
    PolyBuilder I{intro};
    PolyMatrix m(3, 3);
    m.at(0, 0) = -(I.k(1) * I.cn("B") * I.cn("B"));
    m.at(0, 1) = I.k(2);
    m.at(0, 2) = I.k(4);
    m.at(1, 0) = I.k(1) * I.cn("B") * I.cn("B");
    m.at(1, 1) = -(I.k(2) + I.k(3) * I.cn("C"));
    m.at(1, 2) = Poly::zero();
    m.at(2, 0) = Poly::zero();
    m.at(2, 1) = I.k(3) * I.cn("C");
    m.at(2, 2) = -I.k(4);
    CHECK(det_fraction_free(m) == Poly::zero());
    // A 2x2 minor is nonzero, so the rank is exactly 2.
    CHECK_FALSE(det_minor(m, 0, 0).is_zero());
  }
  SUBCASE("0x0 determinant is one") {
    CHECK(det_fraction_free(PolyMatrix(0, 0)) == Poly::one());
  }
  SUBCASE("non-square is rejected") {
    CHECK_THROWS_AS(det_fraction_free(PolyMatrix(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("bareiss agrees with cofactor expansion up to 4x4") {
  RandomPolys gen(1234, small_syms());
  for (unsigned n = 1; n <= 4; ++n) {
    for (int iter = 0; iter < 40; ++iter) {
      PolyMatrix m(n, n);
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m.at(i, j) = gen.poly(2);
      CHECK(det_fraction_free(m) == testutil::det_cofactor(m));
    }
  }
}

TEST_CASE("kernel basis over the function field") {
  auto crn = testutil::main_example();
  PolyBuilder P{crn};
  // Rank-1 matrix: kernel has dimension 2.
  PolyMatrix m(2, 3);
  m.at(0, 0) = P.k(1);
  m.at(0, 1) = P.k(2);
  m.at(0, 2) = P.c(2);
  m.at(1, 0) = P.k(1) * P.c(3);
  m.at(1, 1) = P.k(2) * P.c(3);
  m.at(1, 2) = P.c(2) * P.c(3);
  const auto basis = kernel_basis(m);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    REQUIRE(v.size() == 3);
    for (std::size_t i = 0; i < 2; ++i) {
      Poly dot;
      for (std::size_t j = 0; j < 3; ++j) dot += m.at(i, j) * v[j];
      CHECK(dot.is_zero());
    }
  }
}

TEST_CASE("ratfn linear solve matches substitution") {
  // Entries mimic Laplacian systems: sparse, near-monomial, exponent one.
  RandomPolys gen(555, small_syms());
  int solved = 0;
  for (int iter = 0; iter < 25; ++iter) {
    PolyMatrix m(3, 3);
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = 0; j < 3; ++j) m.at(i, j) = gen.poly(1, 2, 1);
    std::vector<Poly> rhs{gen.poly(1, 2, 1), gen.poly(1, 2, 1), gen.poly(1, 2, 1)};
    auto x = solve_linear(m, rhs);
    if (!x) continue;
    ++solved;
    for (unsigned i = 0; i < 3; ++i) {
      RatFn acc;
      for (unsigned j = 0; j < 3; ++j)
        acc = acc + RatFn::from_poly(m.at(i, j)) * (*x)[j];
      CHECK(acc.equals(RatFn::from_poly(rhs[i])));
    }
  }
  CHECK(solved > 5);
}
