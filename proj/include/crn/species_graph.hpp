#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crn/digraph.hpp"
#include "crn/network.hpp"

namespace crn {

// Induced labeled subgraph of the species graph: an edge i -> j with label r
// whenever reaction r consumes i and produces j and both ends are in the
// node set. Multi-edges and self-loops are kept.
struct SpeciesGraph {
  struct Edge {
    std::uint32_t from, to, reaction;
  };

  std::vector<std::uint32_t> nodes;  // ascending species indices
  std::vector<Edge> edges;           // sorted by (from, to, reaction)

  bool has_node(std::uint32_t species) const;
};

SpeciesGraph species_graph(const Crn& crn, std::vector<std::uint32_t> subset);
SpeciesGraph species_graph(const Crn& crn);  // all species

// Flags of a species subset per the graph definitions, plus the diagnostics
// a rejection message needs.
struct Classification {
  bool full = false;
  bool non_interacting = false;
  bool cut = false;
  std::vector<std::vector<std::uint32_t>> connected_components;  // weak, by min member
  std::vector<bool> strongly_connected;                          // per component

  std::optional<std::pair<std::uint32_t, std::uint32_t>> interacting_pair;
  struct CoefficientViolation {
    std::uint32_t species;
    std::uint32_t complex_index;
    std::uint32_t coefficient;
  };
  std::optional<CoefficientViolation> coefficient_violation;
  std::optional<std::uint32_t> missing_reaction;  // involves a member, never a label
};

Classification classify(const Crn& crn, const std::vector<std::uint32_t>& subset);

// Why a subset cannot be linearly eliminated; empty when it can.
std::string non_interacting_violation_message(const Crn& crn, const Classification& c);

// Species graph as a labeled digraph (labels are the rate-constant symbols),
// for spanning-tree enumeration and DOT export. Node v of the result is
// g.nodes[v].
LabeledDigraph to_labeled(const Crn& crn, const SpeciesGraph& g);

std::string to_dot(const Crn& crn, const SpeciesGraph& g, const std::string& graph_name);

// All maximal non-interacting subsets (maximal under inclusion), each sorted
// ascending; the list is ordered lexicographically. Exhaustive search,
// intended for networks of a few dozen species at most.
std::vector<std::vector<std::uint32_t>> maximal_non_interacting_subsets(const Crn& crn);

// Sorted, deduplicated species indices from names like "S1,S4,S5".
std::vector<std::uint32_t> parse_species_subset(const Crn& crn, std::string_view csv);

}  // namespace crn
