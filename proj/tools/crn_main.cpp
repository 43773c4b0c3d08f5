#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "crn/io.hpp"

namespace {

using namespace crn;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitConfig = 2;
constexpr int kExitInternal = 3;

bool color_enabled() {
  const char* env = std::getenv("CRN_COLOR");
  return env != nullptr && std::string_view(env) == "1";
}

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

struct Options {
  std::string input;
  std::string subset;
  std::vector<std::string> totals;
  std::string format = "text";
  std::string dot_file;
  bool ghat = false;
  bool only_positive = false;
  bool only_minimal = false;
  unsigned long seed = 1;
};

Crn load(const Options& opt) { return Crn::parse_file(opt.input); }

// --total NAME=S1,S4 bindings, keyed by the sorted species sets.
TotalSpec parse_totals(const Crn& crn, const std::vector<std::string>& specs) {
  TotalSpec totals;
  for (const auto& binding : specs) {
    const auto eq = binding.find('=');
    if (eq == std::string::npos)
      throw DomainError("total binding '" + binding + "' is not of the form NAME=SPECIES,...");
    const std::string name = binding.substr(0, eq);
    if (name.empty()) throw DomainError("total binding '" + binding + "' has an empty name");
    auto subset = parse_species_subset(crn, binding.substr(eq + 1));
    totals.by_component[std::move(subset)] = name;
  }
  return totals;
}

// Default names w1, w2, ... for cut components the user left unbound.
void bind_missing_totals(Crn& crn, const std::vector<std::uint32_t>& subset, TotalSpec& totals) {
  const Classification cls = classify(crn, subset);
  if (!cls.non_interacting) return;  // eliminate() will produce the rejection
  unsigned counter = 0;
  for (const auto& component : cls.connected_components) {
    LaplacianSystem sys = build_system(crn, component);
    if (!sys.is_cut()) continue;
    ++counter;
    if (totals.by_component.contains(component)) continue;
    auto taken = [&](const std::string& candidate) {
      if (crn.symbols().lookup(candidate)) return true;
      for (const auto& [subset_key, bound] : totals.by_component)
        if (bound == candidate) return true;
      return false;
    };
    std::string name = "w" + std::to_string(counter);
    while (taken(name)) name += "_";
    std::string members;
    for (auto sp : component) members += (members.empty() ? "" : ",") + crn.species_name(sp);
    std::cerr << "note: binding total amount '" << name << "' to cut component {"
              << members << "}\n";
    totals.by_component[component] = name;
  }
}

bool results_ok(const std::vector<EliminationResult>& results) {
  for (const auto& res : results)
    if (res.kind == EliminationResult::Kind::RankDeficient ||
        res.kind == EliminationResult::Kind::Incompatible)
      return false;
  return true;
}

int cmd_parse(const Options& opt) {
  const Crn crn = load(opt);
  if (opt.format == "json") {
    std::cout << crn_to_json(crn).dump(2) << "\n";
  } else {
    std::cout << crn.serialize();
    std::cout << "# species: " << crn.species_count() << ", complexes: "
              << crn.complex_count() << ", reactions: " << crn.reaction_count() << "\n";
  }
  return kExitOk;
}

int cmd_semiflows(const Options& opt) {
  const Crn crn = load(opt);
  auto basis = semiflow_basis(crn);
  std::vector<Semiflow> shown;
  for (const auto& w : basis) {
    if (opt.only_positive && !w.is_nonneg()) continue;
    if (opt.only_minimal && !is_minimal(crn, w.coeffs)) continue;
    shown.push_back(w);
  }
  if (opt.format == "json") {
    std::cout << semiflow_report_json(crn, shown).dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "stoichiometric matrix rank: " << stoich_rank(crn) << "\n";
  std::cout << "semiflow space dimension:   " << basis.size() << "\n";
  for (const auto& w : shown) {
    std::cout << "  " << semiflow_to_text(crn, w.coeffs);
    std::vector<std::string> flags;
    if (w.is_nonneg()) flags.push_back("P-semiflow");
    if (is_minimal(crn, w.coeffs)) flags.push_back("minimal");
    if (!flags.empty()) {
      std::cout << "   [" << flags[0];
      for (std::size_t i = 1; i < flags.size(); ++i) std::cout << ", " << flags[i];
      std::cout << "]";
    }
    std::cout << "\n";
  }
  if (auto witness = strictly_positive_semiflow(crn)) {
    std::cout << "strictly positive semiflow: " << semiflow_to_text(crn, *witness) << "\n";
  } else {
    std::cout << "strictly positive semiflow: none\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  const Crn crn = load(opt);
  if (opt.subset == "all-noninteracting") {
    const auto subsets = maximal_non_interacting_subsets(crn);
    if (opt.format == "json") {
      Json out = Json::array();
      for (const auto& subset : subsets)
        out.push_back(classification_json(crn, subset, classify(crn, subset)));
      std::cout << out.dump(2) << "\n";
      return kExitOk;
    }
    std::cout << "maximal non-interacting subsets:\n";
    for (const auto& subset : subsets) {
      const auto cls = classify(crn, subset);
      std::string names;
      for (auto sp : subset) names += (names.empty() ? "" : ",") + crn.species_name(sp);
      std::cout << "  {" << names << "}  size " << subset.size()
                << (cls.cut ? "  [cut]" : cls.full ? "  [full]" : "") << "\n";
    }
    return kExitOk;
  }
  const auto subset = parse_species_subset(crn, opt.subset);
  const auto cls = classify(crn, subset);
  if (opt.format == "json") {
    std::cout << classification_json(crn, subset, cls).dump(2) << "\n";
    return kExitOk;
  }
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "full:             " << yn(cls.full) << "\n";
  std::cout << "non-interacting:  " << yn(cls.non_interacting) << "\n";
  std::cout << "cut:              " << yn(cls.cut) << "\n";
  if (!cls.non_interacting)
    std::cout << "violation:        " << non_interacting_violation_message(crn, cls) << "\n";
  std::cout << "components:\n";
  for (std::size_t i = 0; i < cls.connected_components.size(); ++i) {
    std::string names;
    for (auto sp : cls.connected_components[i])
      names += (names.empty() ? "" : ",") + crn.species_name(sp);
    std::cout << "  {" << names << "}"
              << (cls.strongly_connected[i] ? "  strongly connected" : "") << "\n";
  }
  return kExitOk;
}

int cmd_graph(const Options& opt) {
  Crn crn = load(opt);
  std::vector<std::uint32_t> subset;
  if (opt.subset.empty()) {
    for (std::uint32_t i = 0; i < crn.species_count(); ++i) subset.push_back(i);
  } else {
    subset = parse_species_subset(crn, opt.subset);
  }
  std::string dot;
  if (opt.ghat) {
    LaplacianSystem sys = build_system(crn, subset);
    LabeledDigraph g = sys.is_cut() ? sys.ghat : star_extended(sys);
    dot = to_dot(g, crn.symbols(), "Ghat");
  } else {
    dot = to_dot(crn, species_graph(crn, subset), "G");
  }
  if (opt.dot_file.empty() || opt.dot_file == "-") {
    std::cout << dot;
  } else {
    std::ofstream out(opt.dot_file);
    if (!out) throw std::runtime_error("cannot write '" + opt.dot_file + "'");
    out << dot;
  }
  return kExitOk;
}

int cmd_eliminate(const Options& opt) {
  Crn crn = load(opt);
  const auto subset = parse_species_subset(crn, opt.subset);
  TotalSpec totals = parse_totals(crn, opt.totals);
  bind_missing_totals(crn, subset, totals);
  const auto results = eliminate(crn, subset, totals);
  if (opt.format == "json") {
    std::cout << elimination_json(crn, results).dump(2) << "\n";
  } else if (opt.format == "latex") {
    for (const auto& res : results) {
      for (std::size_t i = 0; i < res.subset.size(); ++i)
        if (res.kind == EliminationResult::Kind::Cut ||
            res.kind == EliminationResult::Kind::NonCut)
          std::cout << "\\sigma_{" << crn.species_name(res.subset[i]) << "} &= "
                    << to_latex(res.sigma[i], crn.symbols()) << " \\\\\n";
    }
  } else {
    std::cout << elimination_text(crn, results);
  }
  if (!results_ok(results)) {
    std::cerr << paint("elimination failed for at least one component", "31") << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_reduce(const Options& opt) {
  Crn crn = load(opt);
  const auto subset = parse_species_subset(crn, opt.subset);
  TotalSpec totals = parse_totals(crn, opt.totals);
  bind_missing_totals(crn, subset, totals);
  const auto results = eliminate(crn, subset, totals);
  if (!results_ok(results)) {
    std::cout << elimination_text(crn, results);
    std::cerr << paint("elimination failed; cannot reduce", "31") << "\n";
    return kExitDomain;
  }
  const auto reduced = reduce_system(crn, results);
  if (opt.format == "json")
    std::cout << reduced_json(crn, reduced).dump(2) << "\n";
  else if (opt.format == "latex")
    std::cout << reduced_latex(crn, reduced);
  else
    std::cout << reduced_text(crn, reduced);
  return kExitOk;
}

int cmd_validate(const Options& opt) {
  Crn crn = load(opt);
  const auto subset = parse_species_subset(crn, opt.subset);
  TotalSpec totals = parse_totals(crn, opt.totals);
  bind_missing_totals(crn, subset, totals);
  const auto results = eliminate(crn, subset, totals);
  if (!results_ok(results)) {
    std::cout << elimination_text(crn, results);
    std::cerr << paint("elimination failed; cannot validate", "31") << "\n";
    return kExitDomain;
  }
  const auto reduced = reduce_system(crn, results);

  // Seeded positive rationals p/q with p, q in [1, 1000].
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<long> dist(1, 1000);
  std::map<Sym, Rational> assignment;
  for (std::uint32_t r = 0; r < crn.reaction_count(); ++r)
    assignment[crn.rate(r)] = make_rational(dist(rng), dist(rng));
  for (auto sym : reduced.core_vars) assignment[sym] = make_rational(dist(rng), dist(rng));
  for (std::uint32_t id = 0; id < crn.symbols().count(SymKind::TotalAmount); ++id)
    assignment[Sym{SymKind::TotalAmount, id}] = make_rational(dist(rng), dist(rng));

  const auto report = validate_exact(crn, results, reduced, assignment);
  if (opt.format == "json") {
    Json j = validation_json(crn, reduced, report);
    j["seed"] = opt.seed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "seed: " << opt.seed << "\n";
    for (const auto& [sym, value] : report.assignment)
      std::cout << "  " << crn.symbols().name(sym) << " = " << to_string(value) << "\n";
    std::cout << "reconstructed eliminated concentrations:\n";
    for (const auto& [sp, value] : report.reconstructed)
      std::cout << "  c_" << crn.species_name(sp) << " = " << to_string(value) << "\n";
    auto pf = [&](bool b) { return b ? paint("ok", "32") : paint("FAILED", "31"); };
    std::cout << "reconstructed non-negative:      " << pf(report.reconstructed_nonneg) << "\n";
    std::cout << "eliminated equations vanish:     " << pf(report.eliminated_equations_zero) << "\n";
    std::cout << "cut totals match:                " << pf(report.totals_match) << "\n";
    std::cout << "reduced-equation residuals (not required to vanish):\n";
    for (std::size_t i = 0; i < report.equation_residuals.size(); ++i)
      std::cout << "  Phi_" << crn.species_name(reduced.equations[i].species) << " = "
                << to_string(report.equation_residuals[i]) << "\n";
  }
  return report.ok() ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact steady-state analysis of mass-action reaction networks"};
  app.require_subcommand(1);

  Options opt;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "reaction network file")->required();
  };
  auto add_format = [&](CLI::App* cmd, const std::string& choices) {
    cmd->add_option("--format", opt.format, "output format (" + choices + ")");
  };

  auto* parse = app.add_subcommand("parse", "parse a network and echo it");
  add_input(parse);
  add_format(parse, "text|json");

  auto* semiflows = app.add_subcommand("semiflows", "conservation-law basis");
  add_input(semiflows);
  semiflows->add_flag("--positive", opt.only_positive, "only P-semiflows");
  semiflows->add_flag("--minimal", opt.only_minimal, "only minimal semiflows");
  add_format(semiflows, "text|json");

  auto* classify_cmd = app.add_subcommand("classify", "classify a species subset");
  add_input(classify_cmd);
  classify_cmd->add_option("--subset", opt.subset,
                           "comma-separated species, or all-noninteracting")
      ->required();
  add_format(classify_cmd, "text|json");

  auto* graph = app.add_subcommand("graph", "species graph in DOT form");
  add_input(graph);
  graph->add_option("--subset", opt.subset, "induced subgraph node set");
  graph->add_flag("--ghat", opt.ghat, "emit the collapsed elimination graph");
  graph->add_option("--dot", opt.dot_file, "write to a file instead of stdout");

  auto* eliminate_cmd = app.add_subcommand("eliminate", "eliminate a non-interacting subset");
  add_input(eliminate_cmd);
  eliminate_cmd->add_option("--subset", opt.subset, "comma-separated species")->required();
  eliminate_cmd->add_option("--total", opt.totals,
                            "NAME=SPECIES,... total amount for a cut component");
  add_format(eliminate_cmd, "text|json|latex");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduced steady-state system");
  add_input(reduce_cmd);
  reduce_cmd->add_option("--subset", opt.subset, "comma-separated species")->required();
  reduce_cmd->add_option("--total", opt.totals, "NAME=SPECIES,...");
  add_format(reduce_cmd, "text|json|latex");

  auto* validate_cmd = app.add_subcommand("validate", "exact-evaluation check");
  add_input(validate_cmd);
  validate_cmd->add_option("--subset", opt.subset, "comma-separated species")->required();
  validate_cmd->add_option("--total", opt.totals, "NAME=SPECIES,...");
  validate_cmd->add_option("--seed", opt.seed, "PRNG seed for the assignment");
  add_format(validate_cmd, "text|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (parse->parsed()) return cmd_parse(opt);
    if (semiflows->parsed()) return cmd_semiflows(opt);
    if (classify_cmd->parsed()) return cmd_classify(opt);
    if (graph->parsed()) return cmd_graph(opt);
    if (eliminate_cmd->parsed()) return cmd_eliminate(opt);
    if (reduce_cmd->parsed()) return cmd_reduce(opt);
    if (validate_cmd->parsed()) return cmd_validate(opt);
  } catch (const crn::ParseError& e) {
    std::cerr << paint(e.what(), "31") << "\n";
    return kExitConfig;
  } catch (const crn::DomainError& e) {
    std::cerr << paint(std::string("rejected: ") + e.what(), "31") << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << paint(std::string("error: ") + e.what(), "31") << "\n";
    return kExitConfig;
  } catch (const std::logic_error& e) {
    std::cerr << paint(std::string("internal error: ") + e.what(), "31") << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << paint(std::string("error: ") + e.what(), "31") << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
