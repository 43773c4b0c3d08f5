#include "crn/stoich.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace crn {

std::vector<std::uint32_t> Semiflow::support() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) out.push_back(i);
  return out;
}

bool Semiflow::is_nonneg() const {
  for (const auto& c : coeffs)
    if (sign(c) < 0) return false;
  return true;
}

std::vector<std::vector<long>> stoich_matrix(const Crn& crn) {
  std::vector<std::vector<long>> m(crn.species_count(),
                                   std::vector<long>(crn.reaction_count(), 0));
  for (std::uint32_t r = 0; r < crn.reaction_count(); ++r) {
    const auto& rx = crn.reaction(r);
    for (const auto& [sp, coeff] : crn.complex(rx.terminal).entries)
      m[sp][r] += static_cast<long>(coeff);
    for (const auto& [sp, coeff] : crn.complex(rx.initial).entries)
      m[sp][r] -= static_cast<long>(coeff);
  }
  return m;
}

namespace {

// Reaction vectors as rows (|R| x s): the matrix whose kernel is the
// semiflow space.
std::vector<RatVec> reaction_rows(const Crn& crn, const std::vector<std::uint32_t>& columns) {
  std::vector<RatVec> rows;
  rows.reserve(crn.reaction_count());
  for (std::uint32_t r = 0; r < crn.reaction_count(); ++r) {
    const auto& rx = crn.reaction(r);
    RatVec row(columns.size(), 0);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const std::uint32_t sp = columns[j];
      const long net = static_cast<long>(crn.complex(rx.terminal).coefficient(sp)) -
                       static_cast<long>(crn.complex(rx.initial).coefficient(sp));
      row[j] = Rational(net);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Rref {
  std::vector<RatVec> rows;               // reduced nonzero rows
  std::vector<std::size_t> pivot_col;     // per row
  std::vector<bool> is_pivot;             // per column
};

// Row reduction with a configurable column scan order.
Rref rref(std::vector<RatVec> rows, const std::vector<std::size_t>& column_order) {
  const std::size_t cols = rows.empty() ? column_order.size() : rows[0].size();
  Rref out;
  out.is_pivot.assign(cols, false);
  std::size_t r = 0;
  for (std::size_t col : column_order) {
    if (r >= rows.size()) break;
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    out.pivot_col.push_back(col);
    out.is_pivot[col] = true;
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

RatVec normalize_integer(RatVec v) {
  Rational g = 0;
  for (const auto& x : v) g = rational_gcd(g, x);
  if (g == 0) return v;
  for (const auto& x : v) {
    if (x == 0) continue;
    if (sign(x) < 0) g = -g;
    break;
  }
  for (auto& x : v) x /= g;
  return v;
}

// Kernel basis of the row system, one vector per free column in ascending
// free-column order, normalized to integer content-1 vectors.
std::vector<Semiflow> kernel_from_rref(const Rref& ech, std::size_t cols) {
  std::vector<Semiflow> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (ech.is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < ech.rows.size(); ++r)
      v[ech.pivot_col[r]] = -ech.rows[r][free];
    basis.push_back(Semiflow{normalize_integer(std::move(v))});
  }
  return basis;
}

std::vector<std::size_t> descending_columns(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = n - 1 - i;
  return order;
}

std::vector<std::size_t> ascending_columns(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return order;
}

}  // namespace

std::size_t stoich_rank(const Crn& crn) {
  std::vector<std::uint32_t> all(crn.species_count());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  auto ech = rref(reaction_rows(crn, all), ascending_columns(crn.species_count()));
  return ech.rows.size();
}

std::vector<Semiflow> semiflow_basis(const Crn& crn) {
  std::vector<std::uint32_t> all(crn.species_count());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  // Pivoting on the highest coordinates leaves the lowest ones free; on the
  // worked networks this reproduces the conservation laws as usually written.
  auto ech = rref(reaction_rows(crn, all), descending_columns(crn.species_count()));
  return kernel_from_rref(ech, crn.species_count());
}

bool is_semiflow(const Crn& crn, const RatVec& v) {
  if (v.size() != crn.species_count())
    throw std::invalid_argument("semiflow test: wrong vector length");
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || x != 0;
  if (!nonzero) return false;
  for (std::uint32_t r = 0; r < crn.reaction_count(); ++r) {
    const auto& rx = crn.reaction(r);
    Rational dot = 0;
    for (const auto& [sp, coeff] : crn.complex(rx.terminal).entries)
      dot += v[sp] * static_cast<long>(coeff);
    for (const auto& [sp, coeff] : crn.complex(rx.initial).entries)
      dot -= v[sp] * static_cast<long>(coeff);
    if (dot != 0) return false;
  }
  return true;
}

bool is_psemiflow(const Crn& crn, const RatVec& v) {
  if (!is_semiflow(crn, v)) return false;
  for (const auto& x : v)
    if (sign(x) < 0) return false;
  return true;
}

SupportSpace semiflow_space_on_support(const Crn& crn,
                                       const std::vector<std::uint32_t>& support) {
  if (support.empty()) throw std::invalid_argument("empty support set");
  std::vector<std::uint32_t> cols = support;
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

  auto ech = rref(reaction_rows(crn, cols), descending_columns(cols.size()));
  auto restricted = kernel_from_rref(ech, cols.size());

  SupportSpace out;
  out.dimension = restricted.size();
  for (auto& r : restricted) {
    RatVec full(crn.species_count(), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = r.coeffs[j];
    out.basis.push_back(Semiflow{std::move(full)});
  }
  return out;
}

bool is_minimal(const Crn& crn, const RatVec& omega) {
  if (!is_semiflow(crn, omega))
    throw std::invalid_argument("minimality test: input is not a semiflow");
  Semiflow w{omega};
  return semiflow_space_on_support(crn, w.support()).dimension == 1;
}

bool proportional(const RatVec& v, const RatVec& w) {
  if (v.size() != w.size()) return false;
  Rational factor = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if ((v[i] == 0) != (w[i] == 0)) return false;
    if (v[i] == 0) continue;
    Rational f = v[i] / w[i];
    if (factor == 0)
      factor = f;
    else if (f != factor)
      return false;
  }
  return factor != 0;
}

// ---------------------------------------------------------------------------
// Strictly positive semiflow: Fourier-Motzkin over basis coordinates.

namespace {

struct Inequality {
  RatVec a;    // coefficients over the remaining variables
  Rational b;  // a . x >= b
};

RatVec normalize_ineq(RatVec a, Rational& b) {
  Rational g = abs(b);
  for (const auto& x : a) g = rational_gcd(g, x);
  if (g != 0) {
    for (auto& x : a) x /= g;
    b /= g;
  }
  return a;
}

}  // namespace

std::optional<RatVec> strictly_positive_semiflow(const Crn& crn) {
  const auto basis = semiflow_basis(crn);
  if (basis.empty()) return std::nullopt;
  const std::size_t d = basis.size();
  const std::size_t s = crn.species_count();

  // Feasibility of sum_j x_j basis_j >= 1 coordinatewise.
  std::vector<Inequality> system;
  for (std::size_t i = 0; i < s; ++i) {
    Inequality q;
    q.a.resize(d);
    for (std::size_t j = 0; j < d; ++j) q.a[j] = basis[j].coeffs[i];
    q.b = 1;
    q.a = normalize_ineq(std::move(q.a), q.b);
    system.push_back(std::move(q));
  }

  constexpr std::size_t kInequalityCap = 200000;
  std::vector<std::vector<Inequality>> levels;  // system before eliminating var k

  for (std::size_t var = 0; var < d; ++var) {
    levels.push_back(system);
    std::vector<Inequality> lower, upper, rest;
    for (auto& q : system) {
      if (q.a[var] > 0)
        lower.push_back(std::move(q));
      else if (q.a[var] < 0)
        upper.push_back(std::move(q));
      else
        rest.push_back(std::move(q));
    }
    std::vector<Inequality> next = std::move(rest);
    for (const auto& lo : lower)
      for (const auto& up : upper) {
        // Combine to cancel x_var: up.a[var] < 0 < lo.a[var].
        Inequality q;
        q.a.resize(d);
        const Rational c1 = -up.a[var], c2 = lo.a[var];
        for (std::size_t j = 0; j < d; ++j) q.a[j] = c1 * lo.a[j] + c2 * up.a[j];
        q.b = c1 * lo.b + c2 * up.b;
        q.a = normalize_ineq(std::move(q.a), q.b);
        bool all_zero = true;
        for (const auto& x : q.a) all_zero = all_zero && x == 0;
        if (all_zero) {
          if (q.b > 0) return std::nullopt;  // 0 >= b > 0: infeasible
          continue;
        }
        bool dup = false;
        for (const auto& other : next)
          dup = dup || (other.a == q.a && other.b == q.b);
        if (!dup) next.push_back(std::move(q));
        if (next.size() > kInequalityCap)
          throw std::runtime_error("strictly-positive-semiflow test exceeded size cap");
      }
    system = std::move(next);
  }
  // All variables eliminated; remaining constraints are constant: 0 >= b.
  for (const auto& q : system)
    if (q.b > 0) return std::nullopt;

  // Feasible: back-substitute a concrete point.
  RatVec x(d, 0);
  for (std::size_t var = d; var-- > 0;) {
    const auto& level = levels[var];
    bool has_lo = false, has_up = false;
    Rational lo = 0, up = 0;
    for (const auto& q : level) {
      if (q.a[var] == 0) continue;
      Rational rest = q.b;
      for (std::size_t j = var + 1; j < d; ++j) rest -= q.a[j] * x[j];
      const Rational bound = rest / q.a[var];
      if (q.a[var] > 0) {
        if (!has_lo || bound > lo) lo = bound, has_lo = true;
      } else {
        if (!has_up || bound < up) up = bound, has_up = true;
      }
    }
    if (has_lo && has_up)
      x[var] = (lo + up) / 2;
    else if (has_lo)
      x[var] = lo + 1;
    else if (has_up)
      x[var] = up - 1;
    else
      x[var] = 0;
  }

  RatVec witness(s, 0);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < s; ++i) witness[i] += x[j] * basis[j].coeffs[i];
  for (const auto& w : witness)
    if (w < 1) throw std::logic_error("strictly-positive witness reconstruction failed");
  return normalize_integer(std::move(witness));
}

std::vector<Semiflow> extend_to_semiflow_basis(const Crn& crn,
                                               const std::vector<RatVec>& selected) {
  const auto basis = semiflow_basis(crn);
  std::vector<RatVec> rows;
  for (const auto& v : selected) rows.push_back(v);
  std::size_t rank = rref(rows, ascending_columns(crn.species_count())).rows.size();
  if (rank != selected.size())
    throw std::invalid_argument("selected conservation laws are not independent");

  std::vector<Semiflow> appended;
  for (const auto& candidate : basis) {
    std::vector<RatVec> trial = rows;
    trial.push_back(candidate.coeffs);
    const std::size_t new_rank =
        rref(trial, ascending_columns(crn.species_count())).rows.size();
    if (new_rank > rank) {
      rows.push_back(candidate.coeffs);
      rank = new_rank;
      appended.push_back(candidate);
    }
  }
  if (rank != basis.size())
    throw std::logic_error("conservation-law basis extension failed to reach full rank");
  return appended;
}

}  // namespace crn
