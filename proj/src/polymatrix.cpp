#include "crn/polymatrix.hpp"

#include <stdexcept>

namespace crn {

PolyMatrix PolyMatrix::without_row_col(std::size_t drop_row, std::size_t drop_col) const {
  if (drop_row >= rows_ || drop_col >= cols_)
    throw std::invalid_argument("minor index out of range");
  PolyMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == drop_row) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == drop_col) continue;
      out.at(oi, oj) = at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Poly det_fraction_free(const PolyMatrix& matrix) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = matrix.rows();
  if (n == 0) return Poly::one();

  PolyMatrix m = matrix;
  int sgn = 1;
  Poly prev = Poly::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Poly::zero();
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        auto q = num.divide_exact(prev);
        if (!q)
          throw std::logic_error(
              "fraction-free elimination produced an inexact division; "
              "this is an internal arithmetic bug");
        m.at(i, j) = std::move(*q);
      }
      m.at(i, k) = Poly::zero();
    }
    prev = m.at(k, k);
  }
  Poly det = m.at(n - 1, n - 1);
  return sgn < 0 ? -det : det;
}

Poly det_minor(const PolyMatrix& m, std::size_t drop_row, std::size_t drop_col) {
  return det_fraction_free(m.without_row_col(drop_row, drop_col));
}

namespace {

// Row echelon form over the fraction field; returns pivot column per row.
struct Echelon {
  std::vector<std::vector<RatFn>> rows;
  std::vector<std::size_t> pivot_col;
};

Echelon reduce(const PolyMatrix& m) {
  std::vector<std::vector<RatFn>> rows(m.rows(), std::vector<RatFn>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = RatFn::from_poly(m.at(i, j));

  Echelon ech;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const RatFn inv = RatFn::one() / rows[r][col];
    for (std::size_t j = col; j < m.cols(); ++j) rows[r][j] = rows[r][j] * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col].is_zero()) continue;
      const RatFn f = rows[i][col];
      for (std::size_t j = col; j < m.cols(); ++j)
        rows[i][j] = rows[i][j] - f * rows[r][j];
    }
    ech.pivot_col.push_back(col);
    ++r;
  }
  rows.resize(r);
  ech.rows = std::move(rows);
  return ech;
}

std::vector<Poly> clear_denominators(const std::vector<RatFn>& v) {
  // Multiply through by each distinct denominator once, then strip content.
  std::vector<Poly> dens;
  for (const auto& f : v) {
    if (f.den().is_constant()) continue;
    bool seen = false;
    for (const auto& d : dens) seen = seen || d == f.den();
    if (!seen) dens.push_back(f.den());
  }
  std::vector<Poly> out;
  out.reserve(v.size());
  for (const auto& f : v) {
    Poly p = f.num();
    if (f.den().is_constant()) {
      p = p.scaled(1 / f.den().leading().coeff);
      for (const auto& d : dens) p *= d;
    } else {
      for (const auto& d : dens)
        if (d != f.den()) p *= d;
    }
    out.push_back(std::move(p));
  }
  // Normalize: divide by the gcd of contents, sign from the first nonzero.
  Rational c = 0;
  for (const auto& p : out)
    if (!p.is_zero()) c = rational_gcd(c, p.content());
  if (c != 0) {
    for (const auto& p : out) {
      if (p.is_zero()) continue;
      if (sign(p.leading().coeff) < 0) c = -c;
      break;
    }
    for (auto& p : out) p = p.scaled(1 / c);
  }
  return out;
}

}  // namespace

std::vector<std::vector<Poly>> kernel_basis(const PolyMatrix& m) {
  const Echelon ech = reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Poly>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<RatFn> v(m.cols());
    v[free] = RatFn::one();
    for (std::size_t r = 0; r < ech.rows.size(); ++r)
      v[ech.pivot_col[r]] = -ech.rows[r][free];
    basis.push_back(clear_denominators(v));
  }
  return basis;
}

std::optional<std::vector<RatFn>> solve_linear(const PolyMatrix& m,
                                               const std::vector<Poly>& rhs) {
  if (m.rows() != m.cols() || rhs.size() != m.rows())
    throw std::invalid_argument("solve_linear expects a square system");
  const std::size_t n = m.rows();
  std::vector<std::vector<RatFn>> aug(n, std::vector<RatFn>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = RatFn::from_poly(m.at(i, j));
    aug[i][n] = RatFn::from_poly(rhs[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(aug[col], aug[pivot]);
    const RatFn inv = RatFn::one() / aug[col][col];
    for (std::size_t j = col; j <= n; ++j) aug[col][j] = aug[col][j] * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || aug[i][col].is_zero()) continue;
      const RatFn f = aug[i][col];
      for (std::size_t j = col; j <= n; ++j) aug[i][j] = aug[i][j] - f * aug[col][j];
    }
  }
  std::vector<RatFn> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

}  // namespace crn
