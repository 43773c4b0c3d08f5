#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "crn/poly.hpp"
#include "crn/polymatrix.hpp"

namespace crn {

// Directed multigraph with polynomial edge labels. Node identity is up to
// the caller (species, or species plus a star node).
struct LabeledDigraph {
  struct Edge {
    std::uint32_t from, to;
    Poly label;
  };

  std::vector<std::string> node_names;
  std::vector<Edge> edges;

  std::size_t node_count() const { return node_names.size(); }
  bool has_self_loop() const;
};

// Sums the labels of parallel same-direction edges and drops self-loops.
LabeledDigraph collapse_parallel(const LabeledDigraph& g);

// Laplacian with the column-sum-zero convention: entry (i,j) = label of the
// edge j -> i for i != j, diagonal completes every column sum to zero.
// Parallel edges are summed; self-loops are rejected.
PolyMatrix laplacian(const LabeledDigraph& g);

std::vector<std::vector<std::uint32_t>> weak_components(const LabeledDigraph& g);
std::vector<std::vector<std::uint32_t>> strong_components(const LabeledDigraph& g);
bool is_strongly_connected(const LabeledDigraph& g);

// Exhaustive enumeration of spanning trees rooted at `root` (every non-root
// node has exactly one out-edge and all paths lead to the root). Self-loops
// are skipped. Each tree is the sorted list of chosen edge indices. The
// enumeration backtracks over out-edge choices and is deliberately
// independent of the determinant path; it refuses graphs with more than
// `kMaxSpanningTreeNodes` nodes.
inline constexpr std::size_t kMaxSpanningTreeNodes = 10;
using SpanningTree = std::vector<std::uint32_t>;
std::vector<SpanningTree> spanning_trees_rooted(const LabeledDigraph& g, std::uint32_t root);

// Product of the labels of a tree's edges.
Poly tree_product(const LabeledDigraph& g, const SpanningTree& tree);

// Sum of tree_product over all spanning trees rooted at `root`.
Poly tree_sum_rooted(const LabeledDigraph& g, std::uint32_t root);

std::string to_dot(const LabeledDigraph& g, const SymbolTable& names,
                   const std::string& graph_name);

}  // namespace crn
