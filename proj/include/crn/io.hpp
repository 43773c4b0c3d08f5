#pragma once

#include "json.hpp"

#include <string>

#include "crn/eliminate.hpp"
#include "crn/network.hpp"
#include "crn/poly.hpp"
#include "crn/ratfn.hpp"
#include "crn/reduce.hpp"
#include "crn/species_graph.hpp"
#include "crn/stoich.hpp"

namespace crn {

using Json = nlohmann::ordered_json;

// Polynomial as a list of {"coeff": "p/q", "monomial": {name: power}} in
// canonical term order. Round-trips bit-exactly.
Json poly_to_json(const Poly& p, const SymbolTable& names);
Poly poly_from_json(const Json& j, const SymbolTable& names);

Json ratfn_to_json(const RatFn& f, const SymbolTable& names);

std::string to_latex(const Poly& p, const SymbolTable& names);
std::string to_latex(const RatFn& f, const SymbolTable& names);

Json crn_to_json(const Crn& crn);
Json semiflow_report_json(const Crn& crn, const std::vector<Semiflow>& basis);
Json classification_json(const Crn& crn, const std::vector<std::uint32_t>& subset,
                         const Classification& cls);
Json elimination_json(const Crn& crn, const std::vector<EliminationResult>& results);
Json reduced_json(const Crn& crn, const ReducedSystem& reduced);
Json validation_json(const Crn& crn, const ReducedSystem& reduced,
                     const ValidationReport& report);

std::string semiflow_to_text(const Crn& crn, const RatVec& coeffs);
std::string elimination_text(const Crn& crn, const std::vector<EliminationResult>& results);
std::string reduced_text(const Crn& crn, const ReducedSystem& reduced);
std::string reduced_latex(const Crn& crn, const ReducedSystem& reduced);

}  // namespace crn
