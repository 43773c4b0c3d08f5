#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crn/digraph.hpp"
#include "crn/network.hpp"
#include "crn/polymatrix.hpp"
#include "crn/ratfn.hpp"
#include "crn/species_graph.hpp"

namespace crn {

// Linear steady-state system A x + z = 0 of a connected non-interacting
// subset, in the subset's concentrations. Entries live in the polynomial
// ring over rate constants and the boundary concentrations C_alpha^c.
struct LaplacianSystem {
  std::vector<std::uint32_t> subset;  // ascending species indices, size m
  PolyMatrix A;                       // m x m; column i sums to d[i]
  std::vector<Poly> d;                // each zero or minus an S-positive poly
  std::vector<Poly> z;                // each zero or S-positive
  std::vector<Sym> calpha_c;          // boundary concentration symbols, ascending
  LabeledDigraph ghat;                // collapsed-label graph on the subset

  std::size_t size() const { return subset.size(); }
  bool is_cut() const;
  std::optional<std::size_t> local_index(std::uint32_t species) const;
};

// Builds the system; requires the subset to be non-interacting with a
// weakly connected induced graph (throws DomainError otherwise).
LaplacianSystem build_system(const Crn& crn, const std::vector<std::uint32_t>& subset);

// The star-extended Laplacian graph of a non-cut system: subset nodes plus a
// final node carrying the inflow (z) and outflow (-d) edges.
LabeledDigraph star_extended(const LaplacianSystem& sys);

struct EliminationResult {
  enum class Kind { Cut, NonCut, RankDeficient, Incompatible };

  Kind kind{};
  std::vector<std::uint32_t> subset;  // component species, ascending
  LaplacianSystem system;

  // Cut and NonCut: sigma[i] and phi[i] follow subset order.
  std::vector<Poly> sigma;
  std::vector<RatFn> phi;

  // Cut only.
  std::optional<std::uint32_t> root;  // absolute species index
  std::optional<Sym> total;
  std::vector<RatFn> phibar;

  // NonCut only: sigma_det = (-1)^m det(A), the common denominator.
  Poly sigma_det;

  // RankDeficient / Incompatible: left null vectors of A (polynomial
  // entries, denominator-cleared). Incompatible carries the sign-compatible
  // lambda with lambda . z != 0 as its single certificate row.
  std::vector<std::vector<Poly>> certificate;

  // The steady-state value of an eliminated species: phibar for a cut
  // component, phi otherwise. Throws std::invalid_argument for non-members.
  const RatFn& value_of(std::uint32_t species) const;
};

EliminationResult eliminate_cut(const Crn& crn, const LaplacianSystem& sys, Sym total);
EliminationResult eliminate_noncut(const Crn& crn, const LaplacianSystem& sys);

// Test hook: cut elimination with a caller-chosen root (local index into the
// subset). The default path picks the smallest species index with a nonzero
// sigma.
EliminationResult eliminate_cut_with_root(const Crn& crn, const LaplacianSystem& sys,
                                          Sym total, std::size_t root_local);

// Names for the total-amount symbols of cut components, keyed by the
// (sorted) component species sets.
struct TotalSpec {
  std::map<std::vector<std::uint32_t>, std::string> by_component;
};

// Partitions the subset into weakly connected components of its species
// graph, eliminates each (cut components need a total amount from `totals`),
// checks that the components can be eliminated simultaneously, and returns
// the per-component results ordered by smallest species index.
std::vector<EliminationResult> eliminate(Crn& crn, const std::vector<std::uint32_t>& subset,
                                         const TotalSpec& totals);

// Advisory for a subset whose matrix lacks the rank to eliminate: the
// maximal sub-subsets whose components all satisfy the rank condition
// (some rooted spanning tree for cuts, a star-rooted one otherwise).
// Exhaustive over sub-subsets; refuses subsets larger than 16 species.
std::vector<std::vector<std::uint32_t>> eliminable_subsets_advisory(
    const Crn& crn, const std::vector<std::uint32_t>& subset);

}  // namespace crn
