#pragma once

#include <cstddef>
#include <vector>

#include "crn/poly.hpp"
#include "crn/ratfn.hpp"

namespace crn {

// Dense matrix of polynomials; small (the elimination systems are at most a
// handful of species wide), so no sparsity games.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Poly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  PolyMatrix without_row_col(std::size_t drop_row, std::size_t drop_col) const;
  PolyMatrix transposed() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> a_;
};

// Exact determinant by fraction-free (Bareiss) elimination with column
// pivoting. Every interior division must be exact; a nonzero remainder is an
// arithmetic bug and throws std::logic_error. det of the 0x0 matrix is 1.
Poly det_fraction_free(const PolyMatrix& m);

// Determinant of the minor with one row and one column removed.
Poly det_minor(const PolyMatrix& m, std::size_t drop_row, std::size_t drop_col);

// Basis of the right kernel of m over the rational-function field, computed
// by Gaussian elimination with RatFn arithmetic. Each basis vector is
// denominator-cleared to polynomial entries and content-normalized (first
// nonzero entry has a positive leading coefficient). Deterministic: one
// vector per free column, in column order.
std::vector<std::vector<Poly>> kernel_basis(const PolyMatrix& m);

// Unique solution of m x = rhs over the rational-function field, or nullopt
// when m is singular. Plain Gaussian elimination, independent of the
// Bareiss/minor path.
std::optional<std::vector<RatFn>> solve_linear(const PolyMatrix& m,
                                               const std::vector<Poly>& rhs);

}  // namespace crn
