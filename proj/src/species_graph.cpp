#include "crn/species_graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

namespace crn {

bool SpeciesGraph::has_node(std::uint32_t species) const {
  return std::binary_search(nodes.begin(), nodes.end(), species);
}

SpeciesGraph species_graph(const Crn& crn, std::vector<std::uint32_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (auto sp : subset)
    if (sp >= crn.species_count())
      throw DomainError("species index " + std::to_string(sp) + " out of range");

  SpeciesGraph g;
  g.nodes = std::move(subset);
  for (std::uint32_t r = 0; r < crn.reaction_count(); ++r) {
    const Complex& initial = crn.complex(crn.reaction(r).initial);
    const Complex& terminal = crn.complex(crn.reaction(r).terminal);
    for (const auto& [from, fc] : initial.entries) {
      if (!g.has_node(from)) continue;
      for (const auto& [to, tc] : terminal.entries) {
        if (!g.has_node(to)) continue;
        g.edges.push_back({from, to, r});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.from, a.to, a.reaction) < std::tie(b.from, b.to, b.reaction);
  });
  return g;
}

SpeciesGraph species_graph(const Crn& crn) {
  std::vector<std::uint32_t> all(crn.species_count());
  std::iota(all.begin(), all.end(), 0);
  return species_graph(crn, std::move(all));
}

Classification classify(const Crn& crn, const std::vector<std::uint32_t>& subset) {
  if (subset.empty())
    throw std::invalid_argument("classification of the empty species set");
  const SpeciesGraph g = species_graph(crn, subset);

  Classification out;

  // Non-interacting: no member pair shares a complex, and member
  // stoichiometric coefficients never exceed one anywhere.
  out.non_interacting = true;
  for (std::size_t a = 0; a < g.nodes.size() && out.non_interacting; ++a)
    for (std::size_t b = a + 1; b < g.nodes.size(); ++b)
      if (crn.interacts(g.nodes[a], g.nodes[b])) {
        out.non_interacting = false;
        out.interacting_pair = {g.nodes[a], g.nodes[b]};
        break;
      }
  for (std::uint32_t ci = 0; ci < crn.complex_count() && !out.coefficient_violation; ++ci)
    for (auto sp : g.nodes) {
      const std::uint32_t coeff = crn.complex(ci).coefficient(sp);
      if (coeff > 1) {
        out.non_interacting = false;
        out.coefficient_violation = Classification::CoefficientViolation{sp, ci, coeff};
        break;
      }
    }

  // Full: every reaction involving a member appears as an edge label.
  out.full = true;
  std::vector<bool> is_label(crn.reaction_count(), false);
  for (const auto& e : g.edges) is_label[e.reaction] = true;
  for (std::uint32_t r = 0; r < crn.reaction_count() && out.full; ++r) {
    if (is_label[r]) continue;
    const Complex& initial = crn.complex(crn.reaction(r).initial);
    const Complex& terminal = crn.complex(crn.reaction(r).terminal);
    for (auto sp : g.nodes)
      if (initial.involves(sp) || terminal.involves(sp)) {
        out.full = false;
        out.missing_reaction = r;
        break;
      }
  }

  out.cut = out.full && out.non_interacting;

  // Connectivity of the induced graph.
  std::map<std::uint32_t, std::uint32_t> local;  // species -> local node id
  for (std::uint32_t v = 0; v < g.nodes.size(); ++v) local[g.nodes[v]] = v;
  LabeledDigraph dg;
  for (auto sp : g.nodes) dg.node_names.push_back(crn.species_name(sp));
  for (const auto& e : g.edges)
    dg.edges.push_back({local[e.from], local[e.to], Poly::one()});
  for (auto& component : weak_components(dg)) {
    std::vector<std::uint32_t> members;
    for (auto v : component) members.push_back(g.nodes[v]);
    out.connected_components.push_back(std::move(members));
  }
  for (const auto& component : out.connected_components) {
    // Strong connectivity of the induced subgraph of this component.
    std::map<std::uint32_t, std::uint32_t> sub;
    LabeledDigraph cg;
    for (auto sp : component) {
      sub[sp] = static_cast<std::uint32_t>(cg.node_names.size());
      cg.node_names.push_back(crn.species_name(sp));
    }
    for (const auto& e : g.edges)
      if (sub.contains(e.from) && sub.contains(e.to))
        cg.edges.push_back({sub[e.from], sub[e.to], Poly::one()});
    out.strongly_connected.push_back(is_strongly_connected(cg));
  }
  return out;
}

std::string non_interacting_violation_message(const Crn& crn, const Classification& c) {
  if (c.coefficient_violation) {
    const auto& v = *c.coefficient_violation;
    std::string cx;
    for (const auto& [sp, coeff] : crn.complex(v.complex_index).entries) {
      if (!cx.empty()) cx += " + ";
      if (coeff != 1) cx += std::to_string(coeff) + " ";
      cx += crn.species_name(sp);
    }
    return "concentration of '" + crn.species_name(v.species) + "' has degree " +
           std::to_string(v.coefficient) + " (stoichiometric coefficient " +
           std::to_string(v.coefficient) + " in complex '" + cx +
           "'); linear elimination needs coefficients 0 or 1";
  }
  if (c.interacting_pair) {
    return "species '" + crn.species_name(c.interacting_pair->first) + "' and '" +
           crn.species_name(c.interacting_pair->second) + "' interact";
  }
  return {};
}

LabeledDigraph to_labeled(const Crn& crn, const SpeciesGraph& g) {
  std::map<std::uint32_t, std::uint32_t> local;
  LabeledDigraph out;
  for (std::uint32_t v = 0; v < g.nodes.size(); ++v) {
    local[g.nodes[v]] = v;
    out.node_names.push_back(crn.species_name(g.nodes[v]));
  }
  for (const auto& e : g.edges)
    out.edges.push_back({local[e.from], local[e.to], Poly::symbol(crn.rate(e.reaction))});
  return out;
}

std::string to_dot(const Crn& crn, const SpeciesGraph& g, const std::string& graph_name) {
  std::string out = "digraph " + graph_name + " {\n";
  for (auto sp : g.nodes)
    out += "  n" + std::to_string(sp) + " [label=\"" + crn.species_name(sp) + "\"];\n";
  for (const auto& e : g.edges)
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=\"" + crn.reaction(e.reaction).label + "\"];\n";
  out += "}\n";
  return out;
}

std::vector<std::vector<std::uint32_t>> maximal_non_interacting_subsets(const Crn& crn) {
  // Candidates: species whose coefficient is 0/1 in every complex. Maximal
  // non-interacting sets are the maximal independent sets of the interaction
  // graph on the candidates.
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t sp = 0; sp < crn.species_count(); ++sp) {
    bool ok = true;
    for (std::uint32_t ci = 0; ci < crn.complex_count() && ok; ++ci)
      ok = crn.complex(ci).coefficient(sp) <= 1;
    if (ok) candidates.push_back(sp);
  }

  std::vector<std::vector<std::uint32_t>> result;
  // Bron-Kerbosch on the complement of the interaction graph.
  std::function<void(std::vector<std::uint32_t>, std::vector<std::uint32_t>,
                     std::vector<std::uint32_t>)>
      expand = [&](std::vector<std::uint32_t> r, std::vector<std::uint32_t> p,
                   std::vector<std::uint32_t> x) {
        if (p.empty() && x.empty()) {
          if (!r.empty()) result.push_back(std::move(r));
          return;
        }
        std::vector<std::uint32_t> p_iter = p;
        for (auto v : p_iter) {
          auto compatible = [&](std::uint32_t u) { return !crn.interacts(u, v); };
          std::vector<std::uint32_t> r2 = r;
          r2.push_back(v);
          std::vector<std::uint32_t> p2, x2;
          for (auto u : p)
            if (compatible(u) && u != v) p2.push_back(u);
          for (auto u : x)
            if (compatible(u)) x2.push_back(u);
          expand(std::move(r2), std::move(p2), std::move(x2));
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  expand({}, candidates, {});
  for (auto& s : result) std::sort(s.begin(), s.end());
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<std::uint32_t> parse_species_subset(const Crn& crn, std::string_view csv) {
  std::vector<std::uint32_t> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    std::string_view item = csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    if (!item.empty()) out.push_back(crn.require_species(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw DomainError("empty species subset");
  return out;
}

}  // namespace crn
