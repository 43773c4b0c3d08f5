#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "crn/eliminate.hpp"
#include "crn/network.hpp"
#include "crn/ratfn.hpp"
#include "crn/stoich.hpp"

namespace crn {

// One steady-state equation of a non-eliminated species after substitution
// and denominator clearing.
struct ReducedEquation {
  std::uint32_t species;  // the u of Phi_u
  RatFn substituted;      // the steady-state polynomial with phi substituted
  Poly cleared;           // substituted times the S-positive denominator
  Poly denominator;       // the S-positive factor that was cleared
  bool redundant = false;
  // For a redundant equation: the exact dependence sum_w relation[w] R_w = 0
  // over the non-eliminated species (coefficients aligned with the reduced
  // system's equation order).
  std::vector<Rational> relation;
};

// A conservation law rewritten in core variables: total * denominator =
// cleared_rhs, stored as cleared = total * denominator - cleared_rhs.
struct ConservationEquation {
  RatVec law;  // the semiflow over all species
  Sym total;
  RatFn substituted_rhs;
  Poly cleared;
  Poly denominator;
};

struct ReducedSystem {
  std::vector<Sym> core_vars;               // non-eliminated concentrations
  std::map<std::uint32_t, RatFn> phi_table; // eliminated species -> value
  std::vector<ReducedEquation> equations;   // all non-eliminated u, ascending
  std::vector<ConservationEquation> conservation_eqs;  // non-cut-derived laws
  std::vector<Poly> cleared_denominators;   // every denominator used, in order
  // Cut-derived laws, dropped after the identity sum phibar = total checked.
  std::vector<RatVec> dropped_cut_laws;

  std::size_t retained_equation_count() const;
};

// Substitutes the elimination results into the remaining steady-state
// equations and the conservation laws, clears S-positive denominators, and
// flags redundant equations by exact rank computation over the semiflow
// relations. Requires every component's elimination to have succeeded.
ReducedSystem reduce_system(Crn& crn, const std::vector<EliminationResult>& results);

struct ValidationReport {
  std::map<Sym, Rational> assignment;                     // as used
  std::vector<std::pair<std::uint32_t, Rational>> reconstructed;  // eliminated values
  bool reconstructed_nonneg = true;
  bool eliminated_equations_zero = true;
  bool totals_match = true;
  // Residuals of the reduced equations at the point (not asserted zero: a
  // random assignment is generally not a steady state).
  std::vector<Rational> equation_residuals;
  std::vector<Rational> conservation_residuals;

  bool ok() const {
    return reconstructed_nonneg && eliminated_equations_zero && totals_match;
  }
};

// Exact evaluation oracle: reconstructs the eliminated concentrations from a
// positive assignment of rate constants, core concentrations and totals,
// and checks non-negativity, the eliminated steady-state equations, and the
// cut conservation sums. Throws std::invalid_argument on a non-positive
// assignment.
ValidationReport validate_exact(const Crn& crn,
                                const std::vector<EliminationResult>& results,
                                const ReducedSystem& reduced,
                                const std::map<Sym, Rational>& assignment);

}  // namespace crn
