#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crn/network.hpp"
#include "crn/rational.hpp"

namespace crn {

using RatVec = std::vector<Rational>;

// Non-zero vector orthogonal to every reaction vector y' - y.
struct Semiflow {
  RatVec coeffs;  // length = species count

  std::vector<std::uint32_t> support() const;
  bool is_nonneg() const;

  friend bool operator==(const Semiflow&, const Semiflow&) = default;
};

// s x |R| integer matrix; column r is y'(r) - y(r).
std::vector<std::vector<long>> stoich_matrix(const Crn& crn);

// Rank of the stoichiometric matrix over the rationals (exact elimination).
std::size_t stoich_rank(const Crn& crn);

// Basis of the left nullspace of the stoichiometric matrix. Pivots are
// chosen on the highest species coordinates, so each basis vector is
// parameterized by one of the lowest non-determined coordinates; vectors are
// scaled to integer entries with content 1 and positive first nonzero entry,
// and ordered by that free coordinate. May be empty.
std::vector<Semiflow> semiflow_basis(const Crn& crn);

bool is_semiflow(const Crn& crn, const RatVec& v);
bool is_psemiflow(const Crn& crn, const RatVec& v);

// Dimension and basis of { v in the left nullspace : support(v) within T }.
struct SupportSpace {
  std::size_t dimension = 0;
  std::vector<Semiflow> basis;
};
SupportSpace semiflow_space_on_support(const Crn& crn, const std::vector<std::uint32_t>& support);

// A semiflow is minimal iff it spans every semiflow supported inside its own
// support. Throws std::invalid_argument when the input is not a semiflow.
bool is_minimal(const Crn& crn, const RatVec& omega);

// Exact feasibility of a strictly positive semiflow (every coordinate >= 1
// after scaling); returns a witness when one exists. Fourier-Motzkin over
// the coordinates of the computed basis.
std::optional<RatVec> strictly_positive_semiflow(const Crn& crn);

// True iff v is a rational multiple of w (both nonzero).
bool proportional(const RatVec& v, const RatVec& w);

// Deterministic completion of `selected` (assumed independent semiflows) to
// a basis of the left nullspace, drawing the remaining vectors from
// semiflow_basis(crn) in order. Returns only the appended vectors.
std::vector<Semiflow> extend_to_semiflow_basis(const Crn& crn,
                                               const std::vector<RatVec>& selected);

}  // namespace crn
