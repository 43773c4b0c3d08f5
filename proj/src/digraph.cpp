#include "crn/digraph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace crn {

bool LabeledDigraph::has_self_loop() const {
  for (const auto& e : edges)
    if (e.from == e.to) return true;
  return false;
}

LabeledDigraph collapse_parallel(const LabeledDigraph& g) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> merged;
  for (const auto& e : g.edges) {
    if (e.from == e.to) continue;
    merged[{e.from, e.to}] += e.label;
  }
  LabeledDigraph out;
  out.node_names = g.node_names;
  for (auto& [key, label] : merged) {
    if (label.is_zero()) continue;
    out.edges.push_back({key.first, key.second, std::move(label)});
  }
  return out;
}

PolyMatrix laplacian(const LabeledDigraph& g) {
  if (g.has_self_loop())
    throw std::invalid_argument("laplacian of a graph with self-loops");
  const std::size_t n = g.node_count();
  PolyMatrix m(n, n);
  for (const auto& e : g.edges) {
    m.at(e.to, e.from) += e.label;    // off-diagonal: entry (i,j) = a_{j,i}
    m.at(e.from, e.from) -= e.label;  // completes column `from` to zero sum
  }
  return m;
}

namespace {

std::vector<std::vector<std::uint32_t>> components_from_parent(
    std::vector<std::uint32_t> parent) {
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
  for (std::uint32_t v = 0; v < parent.size(); ++v) groups[find(v)].push_back(v);
  std::vector<std::vector<std::uint32_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> weak_components(const LabeledDigraph& g) {
  std::vector<std::uint32_t> parent(g.node_count());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges) {
    auto a = find(e.from), b = find(e.to);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  return components_from_parent(std::move(parent));
}

std::vector<std::vector<std::uint32_t>> strong_components(const LabeledDigraph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& e : g.edges) adj[e.from].push_back(e.to);

  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> sccs;
  int counter = 0;
  std::function<void(std::uint32_t)> strongconnect = [&](std::uint32_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (auto w : adj[v]) {
      if (index[w] < 0) {
        strongconnect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::uint32_t> comp;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      sccs.push_back(std::move(comp));
    }
  };
  for (std::uint32_t v = 0; v < n; ++v)
    if (index[v] < 0) strongconnect(v);
  std::sort(sccs.begin(), sccs.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return sccs;
}

bool is_strongly_connected(const LabeledDigraph& g) {
  return strong_components(g).size() <= 1;
}

std::vector<SpanningTree> spanning_trees_rooted(const LabeledDigraph& g,
                                                std::uint32_t root) {
  const std::size_t n = g.node_count();
  if (root >= n) throw std::invalid_argument("spanning tree root out of range");
  if (n > kMaxSpanningTreeNodes)
    throw std::invalid_argument("spanning tree enumeration is capped at " +
                                std::to_string(kMaxSpanningTreeNodes) + " nodes");
  if (n == 0) return {};

  // Out-edges per node, self-loops excluded.
  std::vector<std::vector<std::uint32_t>> out(n);
  for (std::uint32_t ei = 0; ei < g.edges.size(); ++ei)
    if (g.edges[ei].from != g.edges[ei].to) out[g.edges[ei].from].push_back(ei);

  std::vector<std::uint32_t> nodes;  // non-root nodes, in order
  for (std::uint32_t v = 0; v < n; ++v)
    if (v != root) nodes.push_back(v);

  std::vector<std::uint32_t> choice(n, UINT32_MAX);  // chosen out-edge per node
  std::vector<SpanningTree> trees;

  std::function<void(std::size_t)> extend = [&](std::size_t level) {
    if (level == nodes.size()) {
      SpanningTree t;
      for (auto v : nodes) t.push_back(choice[v]);
      std::sort(t.begin(), t.end());
      trees.push_back(std::move(t));
      return;
    }
    const std::uint32_t v = nodes[level];
    for (auto ei : out[v]) {
      // Reject a choice that closes a directed cycle among assigned nodes.
      std::uint32_t w = g.edges[ei].to;
      bool cycle = false;
      while (w != root && choice[w] != UINT32_MAX) {
        w = g.edges[choice[w]].to;
        if (w == v) {
          cycle = true;
          break;
        }
      }
      if (cycle) continue;
      choice[v] = ei;
      extend(level + 1);
      choice[v] = UINT32_MAX;
    }
  };
  extend(0);
  return trees;
}

Poly tree_product(const LabeledDigraph& g, const SpanningTree& tree) {
  Poly p = Poly::one();
  for (auto ei : tree) p *= g.edges.at(ei).label;
  return p;
}

Poly tree_sum_rooted(const LabeledDigraph& g, std::uint32_t root) {
  Poly sum;
  for (const auto& tree : spanning_trees_rooted(g, root)) sum += tree_product(g, tree);
  return sum;
}

std::string to_dot(const LabeledDigraph& g, const SymbolTable& names,
                   const std::string& graph_name) {
  std::string out = "digraph " + graph_name + " {\n";
  for (std::uint32_t v = 0; v < g.node_count(); ++v)
    out += "  n" + std::to_string(v) + " [label=\"" + g.node_names[v] + "\"];\n";
  for (const auto& e : g.edges)
    out += "  n" + std::to_string(e.from) + " -> n" + std::to_string(e.to) +
           " [label=\"" + to_text(e.label, names) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace crn
