#pragma once

#include <doctest.h>

#include "crn/polymatrix.hpp"

namespace testutil {

using namespace crn;

// Cofactor expansion along the first row; exponential, test-only oracle for
// the fraction-free determinant.
inline Poly det_cofactor(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  REQUIRE(m.cols() == n);
  if (n == 0) return Poly::one();
  if (n == 1) return m.at(0, 0);
  Poly det;
  for (std::size_t j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    Poly sub = m.at(0, j) * det_cofactor(m.without_row_col(0, j));
    det += (j % 2 == 0) ? sub : -sub;
  }
  return det;
}

}  // namespace testutil
