#include "crn/reduce.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace crn {

std::size_t ReducedSystem::retained_equation_count() const {
  std::size_t n = conservation_eqs.size();
  for (const auto& eq : equations)
    if (!eq.redundant) ++n;
  return n;
}

namespace {

// Sum of coeff_t * value_t over terms, cleared by the product of the
// distinct denominators among the values. Returns (cleared numerator, that
// product).
struct ClearedSum {
  Poly numerator;
  Poly denominator;
};

ClearedSum sum_over_common_denominator(const std::vector<std::pair<Poly, Poly>>& parts) {
  std::vector<Poly> dens;
  for (const auto& [num, den] : parts) {
    if (den.is_one()) continue;
    bool seen = false;
    for (const auto& d : dens) seen = seen || d == den;
    if (!seen) dens.push_back(den);
  }
  ClearedSum out;
  out.denominator = Poly::one();
  for (const auto& d : dens) out.denominator *= d;
  for (const auto& [num, den] : parts) {
    Poly scaled = num;
    for (const auto& d : dens)
      if (d != den) scaled *= d;
    out.numerator += scaled;
  }
  return out;
}

// Substitutes the eliminated concentrations of one polynomial. Returns the
// per-term (numerator, denominator) pairs; each term of a steady-state
// polynomial contains at most one eliminated concentration, to power one.
std::vector<std::pair<Poly, Poly>> substituted_terms(
    const Poly& p, const std::map<std::uint32_t, RatFn>& phi_table) {
  std::vector<std::pair<Poly, Poly>> parts;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> core;
    const RatFn* phi = nullptr;
    for (const auto& [sym, exp] : t.mono.factors()) {
      if (sym.kind == SymKind::Conc) {
        auto it = phi_table.find(sym.id);
        if (it != phi_table.end()) {
          if (phi != nullptr || exp != 1)
            throw std::logic_error(
                "eliminated concentration appears nonlinearly; the subset was "
                "not non-interacting");
          if (it->second.den().is_zero())
            throw std::logic_error("substitution divides by the zero polynomial");
          phi = &it->second;
          continue;
        }
      }
      core.push_back({sym, exp});
    }
    Poly num = Poly::term(t.coeff, Monomial::from_factors(std::move(core)));
    if (phi != nullptr)
      parts.emplace_back(num * phi->num(), phi->den());
    else
      parts.emplace_back(std::move(num), Poly::one());
  }
  return parts;
}

RatVec indicator(const std::vector<std::uint32_t>& subset, std::size_t n) {
  RatVec v(n, 0);
  for (auto sp : subset) v[sp] = 1;
  return v;
}

// Row reduction of the semiflow projections onto the retained coordinates;
// pivot columns mark the redundant steady-state equations.
struct RelationSpace {
  std::vector<RatVec> rows;             // RREF rows over the U coordinates
  std::vector<std::size_t> pivot_col;
};

RelationSpace relation_space(const std::vector<Semiflow>& basis,
                             const std::vector<std::uint32_t>& retained_species) {
  std::vector<RatVec> rows;
  for (const auto& w : basis) {
    RatVec row(retained_species.size());
    bool nonzero = false;
    for (std::size_t j = 0; j < retained_species.size(); ++j) {
      row[j] = w.coeffs[retained_species[j]];
      nonzero = nonzero || row[j] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  RelationSpace out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < retained_species.size() && r < rows.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const Rational inv = 1 / rows[r][col];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = 0; j < retained_species.size(); ++j)
        rows[i][j] -= f * rows[r][j];
    }
    out.pivot_col.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

ReducedSystem reduce_system(Crn& crn, const std::vector<EliminationResult>& results) {
  ReducedSystem out;

  std::set<std::uint32_t> eliminated;
  for (const auto& res : results) {
    if (res.kind != EliminationResult::Kind::Cut &&
        res.kind != EliminationResult::Kind::NonCut)
      throw DomainError("cannot reduce: a component's elimination did not succeed");
    for (auto sp : res.subset) {
      if (!eliminated.insert(sp).second)
        throw std::invalid_argument("species eliminated twice across components");
      out.phi_table.emplace(sp, res.value_of(sp));
    }
  }

  std::vector<std::uint32_t> retained;
  for (std::uint32_t sp = 0; sp < crn.species_count(); ++sp)
    if (!eliminated.contains(sp)) {
      retained.push_back(sp);
      out.core_vars.push_back(crn.conc(sp));
    }

  const std::set<Sym> allowed = [&] {
    std::set<Sym> s(out.core_vars.begin(), out.core_vars.end());
    for (std::uint32_t r = 0; r < crn.reaction_count(); ++r) s.insert(crn.rate(r));
    for (const auto& [sp, phi] : out.phi_table) phi.collect_symbols(s);
    return s;
  }();

  // Steady-state equations of the retained species.
  for (auto u : retained) {
    ReducedEquation eq;
    eq.species = u;
    auto parts = substituted_terms(crn.steady_state_poly(u), out.phi_table);
    auto cleared = sum_over_common_denominator(parts);
    const RatFn normalized = RatFn::of(cleared.numerator, cleared.denominator);
    eq.substituted = normalized;
    eq.cleared = normalized.num();
    eq.denominator = normalized.den();
    if (!eq.denominator.is_s_positive())
      throw std::logic_error("cleared denominator is not S-positive");
    for (const auto& sym : eq.cleared.symbols())
      if (!allowed.contains(sym))
        throw std::logic_error("reduced equation mentions an eliminated symbol");
    out.equations.push_back(std::move(eq));
  }

  // Redundancy: every semiflow omega yields sum_u omega_u R_u = 0 over the
  // retained equations (the eliminated ones vanish identically after
  // substitution). Pivot columns of the projected relation space flag the
  // equations that are exact consequences of the others.
  const auto basis = semiflow_basis(crn);
  const RelationSpace rel = relation_space(basis, retained);
  for (std::size_t r = 0; r < rel.rows.size(); ++r) {
    RatFn combo;
    for (std::size_t j = 0; j < retained.size(); ++j) {
      if (rel.rows[r][j] == 0) continue;
      combo = combo + RatFn::of(out.equations[j].substituted.num().scaled(rel.rows[r][j]),
                                out.equations[j].substituted.den());
    }
    if (!combo.is_zero())
      throw std::logic_error("semiflow relation does not annihilate the reduced system");
    auto& eq = out.equations[rel.pivot_col[r]];
    eq.redundant = true;
    eq.relation = rel.rows[r];
  }

  // Conservation laws: cut-derived ones close to total = total and are
  // dropped; the basis extension is rewritten in core variables.
  std::vector<RatVec> cut_laws;
  for (const auto& res : results) {
    if (res.kind != EliminationResult::Kind::Cut) continue;
    RatVec law = indicator(res.subset, crn.species_count());
    RatFn sum;
    for (auto sp : res.subset) sum = sum + out.phi_table.at(sp);
    if (!sum.equals(RatFn::from_poly(Poly::symbol(*res.total))))
      throw std::logic_error("cut conservation law does not reduce to its total");
    out.dropped_cut_laws.push_back(law);
    cut_laws.push_back(std::move(law));
  }

  const auto extension = extend_to_semiflow_basis(crn, cut_laws);
  for (std::size_t l = 0; l < extension.size(); ++l) {
    ConservationEquation ce;
    ce.law = extension[l].coeffs;
    ce.total = crn.fresh_total("W" + std::to_string(l + 1));

    std::vector<std::pair<Poly, Poly>> parts;
    for (std::uint32_t sp = 0; sp < crn.species_count(); ++sp) {
      if (ce.law[sp] == 0) continue;
      auto it = out.phi_table.find(sp);
      if (it == out.phi_table.end()) {
        parts.emplace_back(Poly::symbol(crn.conc(sp)).scaled(ce.law[sp]), Poly::one());
      } else {
        parts.emplace_back(it->second.num().scaled(ce.law[sp]), it->second.den());
      }
    }
    auto cleared = sum_over_common_denominator(parts);
    ce.substituted_rhs = RatFn::of(cleared.numerator, cleared.denominator);
    const RatFn normalized = RatFn::of(
        Poly::symbol(ce.total) * cleared.denominator - cleared.numerator,
        cleared.denominator);
    ce.cleared = normalized.num();
    ce.denominator = normalized.den();
    if (!ce.denominator.is_s_positive())
      throw std::logic_error("cleared denominator is not S-positive");
    out.conservation_eqs.push_back(std::move(ce));
  }

  for (const auto& eq : out.equations) out.cleared_denominators.push_back(eq.denominator);
  for (const auto& ce : out.conservation_eqs)
    out.cleared_denominators.push_back(ce.denominator);
  return out;
}

ValidationReport validate_exact(const Crn& crn,
                                const std::vector<EliminationResult>& results,
                                const ReducedSystem& reduced,
                                const std::map<Sym, Rational>& assignment) {
  for (const auto& [sym, value] : assignment)
    if (sign(value) <= 0)
      throw std::invalid_argument("validation assignment must be strictly positive ('" +
                                  crn.symbols().name(sym) + "' is not)");

  ValidationReport report;
  report.assignment = assignment;

  std::map<Sym, Rational> point = assignment;
  auto lookup = [&](Sym s) -> Rational {
    auto it = point.find(s);
    if (it == point.end())
      throw std::out_of_range("no value assigned to symbol '" + crn.symbols().name(s) + "'");
    return it->second;
  };

  // Reconstruct the eliminated concentrations.
  for (const auto& [sp, phi] : reduced.phi_table) {
    const Rational value = phi.eval(lookup);
    report.reconstructed.emplace_back(sp, value);
    if (sign(value) < 0) report.reconstructed_nonneg = false;
    point.emplace(crn.conc(sp), value);
  }

  // The eliminated steady-state equations must vanish exactly.
  for (const auto& [sp, value] : report.reconstructed) {
    if (crn.steady_state_poly(sp).eval(lookup) != 0)
      report.eliminated_equations_zero = false;
  }

  // Cut conservation sums equal their totals exactly.
  for (const auto& res : results) {
    if (res.kind != EliminationResult::Kind::Cut) continue;
    Rational sum = 0;
    for (auto sp : res.subset) sum += point.at(crn.conc(sp));
    if (sum != lookup(*res.total)) report.totals_match = false;
  }

  for (const auto& eq : reduced.equations)
    report.equation_residuals.push_back(eq.cleared.eval(lookup));
  for (const auto& ce : reduced.conservation_eqs)
    report.conservation_residuals.push_back(ce.cleared.eval(lookup));
  return report;
}

}  // namespace crn
