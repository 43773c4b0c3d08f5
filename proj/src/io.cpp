#include "crn/io.hpp"

namespace crn {

Json poly_to_json(const Poly& p, const SymbolTable& names) {
  Json terms = Json::array();
  for (const auto& t : p.terms()) {
    Json mono = Json::object();
    for (const auto& [sym, exp] : t.mono.factors()) mono[names.name(sym)] = exp;
    terms.push_back({{"coeff", to_string(t.coeff)}, {"monomial", std::move(mono)}});
  }
  return terms;
}

Poly poly_from_json(const Json& j, const SymbolTable& names) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  std::vector<Term> terms;
  for (const auto& tj : j) {
    const Rational coeff = parse_rational(tj.at("coeff").get<std::string>());
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, exp] : tj.at("monomial").items()) {
      auto sym = names.lookup(name);
      if (!sym) throw std::invalid_argument("unknown symbol '" + name + "'");
      factors.push_back({*sym, exp.get<std::uint32_t>()});
    }
    terms.push_back({Monomial::from_factors(std::move(factors)), coeff});
  }
  return Poly::from_terms(std::move(terms));
}

Json ratfn_to_json(const RatFn& f, const SymbolTable& names) {
  return Json{{"num", poly_to_json(f.num(), names)}, {"den", poly_to_json(f.den(), names)}};
}

// ---------------------------------------------------------------------------
// LaTeX

namespace {

std::string latex_symbol(const std::string& name) {
  const auto underscore = name.find('_');
  if (underscore == std::string::npos) return name;
  return name.substr(0, underscore) + "_{" + name.substr(underscore + 1) + "}";
}

std::string latex_rational(const Rational& q, bool with_sign) {
  const Rational a = abs(q);
  std::string body = a.get_den() == 1
                         ? a.get_num().get_str()
                         : "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  if (!with_sign) return body;
  return (sign(q) < 0 ? "-" : "") + body;
}

}  // namespace

std::string to_latex(const Poly& p, const SymbolTable& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (first) {
      if (sign(t.coeff) < 0) out += "-";
    } else {
      out += sign(t.coeff) < 0 ? " - " : " + ";
    }
    first = false;
    const Rational a = abs(t.coeff);
    if (t.mono.is_unit() || a != 1) out += latex_rational(t.coeff, false);
    for (const auto& [sym, exp] : t.mono.factors()) {
      out += " " + latex_symbol(names.name(sym));
      if (exp != 1) out += "^{" + std::to_string(exp) + "}";
    }
  }
  return out;
}

std::string to_latex(const RatFn& f, const SymbolTable& names) {
  if (f.den().is_one()) return to_latex(f.num(), names);
  return "\\frac{" + to_latex(f.num(), names) + "}{" + to_latex(f.den(), names) + "}";
}

// ---------------------------------------------------------------------------
// Reports

Json crn_to_json(const Crn& crn) {
  Json species = Json::array();
  for (std::uint32_t i = 0; i < crn.species_count(); ++i)
    species.push_back(crn.species_name(i));

  Json complexes = Json::array();
  for (std::uint32_t ci = 0; ci < crn.complex_count(); ++ci) {
    Json cx = Json::object();
    for (const auto& [sp, coeff] : crn.complex(ci).entries)
      cx[crn.species_name(sp)] = coeff;
    complexes.push_back(std::move(cx));
  }

  Json reactions = Json::array();
  for (std::uint32_t r = 0; r < crn.reaction_count(); ++r) {
    const auto& rx = crn.reaction(r);
    reactions.push_back({{"label", rx.label},
                         {"initial", rx.initial},
                         {"terminal", rx.terminal},
                         {"rate", crn.symbols().name(rx.rate)}});
  }
  Json steady = Json::object();
  for (std::uint32_t i = 0; i < crn.species_count(); ++i)
    steady[crn.species_name(i)] = poly_to_json(crn.steady_state_poly(i), crn.symbols());
  return Json{{"species", std::move(species)},
              {"complexes", std::move(complexes)},
              {"reactions", std::move(reactions)},
              {"steady_state", std::move(steady)}};
}

std::string semiflow_to_text(const Crn& crn, const RatVec& coeffs) {
  std::string out;
  for (std::uint32_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const bool negative = sign(coeffs[i]) < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational a = abs(coeffs[i]);
    if (a != 1) out += to_string(a) + " ";
    out += crn.species_name(i);
  }
  return out.empty() ? "0" : out;
}

Json semiflow_report_json(const Crn& crn, const std::vector<Semiflow>& basis) {
  Json vectors = Json::array();
  for (const auto& w : basis) {
    Json coeffs = Json::array();
    for (const auto& c : w.coeffs) coeffs.push_back(to_string(c));
    Json support = Json::array();
    for (auto sp : w.support()) support.push_back(crn.species_name(sp));
    vectors.push_back({{"vector", std::move(coeffs)},
                       {"text", semiflow_to_text(crn, w.coeffs)},
                       {"psemiflow", w.is_nonneg()},
                       {"minimal", is_minimal(crn, w.coeffs)},
                       {"support", std::move(support)}});
  }
  return Json{{"rank", stoich_rank(crn)},
              {"dimension", basis.size()},
              {"basis", std::move(vectors)}};
}

Json classification_json(const Crn& crn, const std::vector<std::uint32_t>& subset,
                         const Classification& cls) {
  Json names = Json::array();
  for (auto sp : subset) names.push_back(crn.species_name(sp));
  Json components = Json::array();
  for (std::size_t i = 0; i < cls.connected_components.size(); ++i) {
    Json members = Json::array();
    for (auto sp : cls.connected_components[i]) members.push_back(crn.species_name(sp));
    components.push_back({{"species", std::move(members)},
                          {"strongly_connected", static_cast<bool>(cls.strongly_connected[i])}});
  }
  Json out{{"subset", std::move(names)},
           {"full", cls.full},
           {"non_interacting", cls.non_interacting},
           {"cut", cls.cut},
           {"components", std::move(components)}};
  if (!cls.non_interacting)
    out["violation"] = non_interacting_violation_message(crn, cls);
  if (cls.missing_reaction)
    out["missing_reaction"] = crn.reaction(*cls.missing_reaction).label;
  return out;
}

namespace {

Json poly_map_json(const Crn& crn, const std::vector<std::uint32_t>& subset,
                   const std::vector<Poly>& polys) {
  Json out = Json::object();
  for (std::size_t i = 0; i < subset.size(); ++i)
    out[crn.species_name(subset[i])] = to_text(polys[i], crn.symbols());
  return out;
}

Json ratfn_map_json(const Crn& crn, const std::vector<std::uint32_t>& subset,
                    const std::vector<RatFn>& fns) {
  Json out = Json::object();
  for (std::size_t i = 0; i < subset.size(); ++i)
    out[crn.species_name(subset[i])] = to_text(fns[i], crn.symbols());
  return out;
}

const char* kind_name(EliminationResult::Kind kind) {
  switch (kind) {
    case EliminationResult::Kind::Cut: return "cut";
    case EliminationResult::Kind::NonCut: return "noncut";
    case EliminationResult::Kind::RankDeficient: return "rank_deficient";
    case EliminationResult::Kind::Incompatible: return "incompatible";
  }
  return "?";
}

}  // namespace

Json elimination_json(const Crn& crn, const std::vector<EliminationResult>& results) {
  Json components = Json::array();
  for (const auto& res : results) {
    Json subset = Json::array();
    for (auto sp : res.subset) subset.push_back(crn.species_name(sp));
    Json boundary = Json::array();
    for (auto sym : res.system.calpha_c) boundary.push_back(crn.symbols().name(sym));

    Json cj{{"kind", kind_name(res.kind)},
            {"subset", std::move(subset)},
            {"calpha_c", std::move(boundary)}};
    switch (res.kind) {
      case EliminationResult::Kind::Cut:
        cj["root"] = crn.species_name(*res.root);
        cj["total"] = crn.symbols().name(*res.total);
        cj["sigma"] = poly_map_json(crn, res.subset, res.sigma);
        cj["phi"] = ratfn_map_json(crn, res.subset, res.phi);
        cj["phibar"] = ratfn_map_json(crn, res.subset, res.phibar);
        break;
      case EliminationResult::Kind::NonCut:
        cj["sigma_star"] = to_text(res.sigma_det, crn.symbols());
        cj["sigma"] = poly_map_json(crn, res.subset, res.sigma);
        cj["phi"] = ratfn_map_json(crn, res.subset, res.phi);
        break;
      case EliminationResult::Kind::RankDeficient:
      case EliminationResult::Kind::Incompatible: {
        Json certs = Json::array();
        for (const auto& lambda : res.certificate) {
          Json row = Json::array();
          for (const auto& p : lambda) row.push_back(to_text(p, crn.symbols()));
          certs.push_back(std::move(row));
        }
        cj["certificate"] = std::move(certs);
        if (res.kind == EliminationResult::Kind::RankDeficient) {
          Json advisory = Json::array();
          for (const auto& sub : eliminable_subsets_advisory(crn, res.subset)) {
            Json names = Json::array();
            for (auto sp : sub) names.push_back(crn.species_name(sp));
            advisory.push_back(std::move(names));
          }
          cj["eliminable_subsets"] = std::move(advisory);
        }
        break;
      }
    }
    components.push_back(std::move(cj));
  }
  return Json{{"components", std::move(components)}};
}

std::string elimination_text(const Crn& crn, const std::vector<EliminationResult>& results) {
  std::string out;
  for (const auto& res : results) {
    std::string names;
    for (auto sp : res.subset) names += (names.empty() ? "" : ",") + crn.species_name(sp);
    out += "component {" + names + "}: " + kind_name(res.kind) + "\n";
    switch (res.kind) {
      case EliminationResult::Kind::Cut:
        out += "  root " + crn.species_name(*res.root) + ", total " +
               crn.symbols().name(*res.total) + "\n";
        for (std::size_t i = 0; i < res.subset.size(); ++i)
          out += "  sigma_" + crn.species_name(res.subset[i]) + " = " +
                 to_text(res.sigma[i], crn.symbols()) + "\n";
        for (std::size_t i = 0; i < res.subset.size(); ++i)
          out += "  c_" + crn.species_name(res.subset[i]) + " = " +
                 to_text(res.phibar[i], crn.symbols()) + "\n";
        break;
      case EliminationResult::Kind::NonCut:
        out += "  sigma = " + to_text(res.sigma_det, crn.symbols()) + "\n";
        for (std::size_t i = 0; i < res.subset.size(); ++i)
          out += "  sigma_" + crn.species_name(res.subset[i]) + " = " +
                 to_text(res.sigma[i], crn.symbols()) + "\n";
        for (std::size_t i = 0; i < res.subset.size(); ++i)
          out += "  c_" + crn.species_name(res.subset[i]) + " = " +
                 to_text(res.phi[i], crn.symbols()) + "\n";
        break;
      case EliminationResult::Kind::RankDeficient:
      case EliminationResult::Kind::Incompatible:
        for (const auto& lambda : res.certificate) {
          out += "  lambda = (";
          for (std::size_t i = 0; i < lambda.size(); ++i)
            out += (i ? ", " : "") + to_text(lambda[i], crn.symbols());
          out += ")\n";
        }
        if (res.kind == EliminationResult::Kind::RankDeficient) {
          out += "  maximal eliminable sub-subsets:";
          const auto advisory = eliminable_subsets_advisory(crn, res.subset);
          if (advisory.empty()) out += " (none)";
          for (const auto& sub : advisory) {
            std::string s;
            for (auto sp : sub) s += (s.empty() ? "" : ",") + crn.species_name(sp);
            out += " {" + s + "}";
          }
          out += "\n";
        }
        break;
    }
  }
  return out;
}

Json reduced_json(const Crn& crn, const ReducedSystem& reduced) {
  Json core = Json::array();
  for (auto sym : reduced.core_vars) core.push_back(crn.symbols().name(sym));

  Json phis = Json::object();
  for (const auto& [sp, phi] : reduced.phi_table)
    phis[crn.species_name(sp)] = to_text(phi, crn.symbols());

  Json equations = Json::array();
  for (const auto& eq : reduced.equations) {
    Json ej{{"species", crn.species_name(eq.species)},
            {"equation", to_text(eq.cleared, crn.symbols())},
            {"denominator", to_text(eq.denominator, crn.symbols())},
            {"redundant", eq.redundant}};
    equations.push_back(std::move(ej));
  }

  Json laws = Json::array();
  for (const auto& ce : reduced.conservation_eqs)
    laws.push_back({{"total", crn.symbols().name(ce.total)},
                    {"law", semiflow_to_text(crn, ce.law)},
                    {"equation", to_text(ce.cleared, crn.symbols())},
                    {"denominator", to_text(ce.denominator, crn.symbols())}});

  Json dropped = Json::array();
  for (const auto& law : reduced.dropped_cut_laws)
    dropped.push_back(semiflow_to_text(crn, law));

  return Json{{"core_vars", std::move(core)},
              {"phi", std::move(phis)},
              {"equations", std::move(equations)},
              {"conservation", std::move(laws)},
              {"dropped_cut_laws", std::move(dropped)}};
}

std::string reduced_text(const Crn& crn, const ReducedSystem& reduced) {
  std::string out = "core variables:";
  for (auto sym : reduced.core_vars) out += " " + crn.symbols().name(sym);
  out += "\n";
  for (const auto& eq : reduced.equations) {
    out += "Phi_" + crn.species_name(eq.species) + ": 0 = " +
           to_text(eq.cleared, crn.symbols());
    if (eq.redundant) out += "   [redundant]";
    out += "\n";
  }
  for (const auto& ce : reduced.conservation_eqs) {
    out += "xi (" + semiflow_to_text(crn, ce.law) + "): 0 = " +
           to_text(ce.cleared, crn.symbols()) + "\n";
  }
  for (const auto& law : reduced.dropped_cut_laws)
    out += "cut law " + semiflow_to_text(crn, law) + ": reduces to its total (dropped)\n";
  return out;
}

std::string reduced_latex(const Crn& crn, const ReducedSystem& reduced) {
  std::string out = "\\begin{align*}\n";
  for (const auto& eq : reduced.equations) {
    if (eq.redundant) continue;
    out += "0 &= " + to_latex(eq.cleared, crn.symbols()) + " \\\\\n";
  }
  for (const auto& ce : reduced.conservation_eqs)
    out += "0 &= " + to_latex(ce.cleared, crn.symbols()) + " \\\\\n";
  out += "\\end{align*}\n";
  return out;
}

Json validation_json(const Crn& crn, const ReducedSystem& reduced,
                     const ValidationReport& report) {
  Json assignment = Json::object();
  for (const auto& [sym, value] : report.assignment)
    assignment[crn.symbols().name(sym)] = to_string(value);

  Json reconstructed = Json::object();
  for (const auto& [sp, value] : report.reconstructed)
    reconstructed[crn.species_name(sp)] = to_string(value);

  Json residuals = Json::array();
  for (std::size_t i = 0; i < report.equation_residuals.size(); ++i)
    residuals.push_back({{"species", crn.species_name(reduced.equations[i].species)},
                         {"residual", to_string(report.equation_residuals[i])}});
  Json law_residuals = Json::array();
  for (std::size_t i = 0; i < report.conservation_residuals.size(); ++i)
    law_residuals.push_back(
        {{"total", crn.symbols().name(reduced.conservation_eqs[i].total)},
         {"residual", to_string(report.conservation_residuals[i])}});

  return Json{{"assignment", std::move(assignment)},
              {"reconstructed", std::move(reconstructed)},
              {"reconstructed_nonneg", report.reconstructed_nonneg},
              {"eliminated_equations_zero", report.eliminated_equations_zero},
              {"totals_match", report.totals_match},
              {"equation_residuals", std::move(residuals)},
              {"conservation_residuals", std::move(law_residuals)},
              {"ok", report.ok()}};
}

}  // namespace crn
