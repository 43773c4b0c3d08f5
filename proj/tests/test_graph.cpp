#include <doctest.h>

#include "crn/eliminate.hpp"
#include "crn/species_graph.hpp"
#include "crn/stoich.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace crn;
using testutil::PolyBuilder;
using testutil::ids;

namespace {

// Signed minor of the Laplacian, per the Matrix-Tree statement.
Poly signed_minor(const PolyMatrix& lap, std::size_t i, std::size_t j) {
  const std::size_t n = lap.rows();
  Poly minor = det_minor(lap, i, j);
  const bool negate = ((n - 1) + i + j) % 2 == 1;
  return negate ? -minor : minor;
}

LabeledDigraph random_graph(std::mt19937_64& rng, SymbolTable& table, unsigned serial) {
  std::uniform_int_distribution<unsigned> node_count(2, 6);
  std::uniform_int_distribution<int> percent(0, 99);
  LabeledDigraph g;
  const unsigned n = node_count(rng);
  for (unsigned v = 0; v < n; ++v) g.node_names.push_back("n" + std::to_string(v));
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      if (a == b || percent(rng) >= 40) continue;
      const Sym label = table.add(SymKind::RateConst,
                                  "e" + std::to_string(serial) + "_" + std::to_string(a) +
                                      "_" + std::to_string(b));
      g.edges.push_back({a, b, Poly::symbol(label)});
    }
  return g;
}

}  // namespace

TEST_CASE("induced species graphs") {
  const Crn crn = testutil::main_example();

  SUBCASE("subset {S8,S9}") {
    const SpeciesGraph g = species_graph(crn, ids(crn, {"S8", "S9"}));
    REQUIRE(g.edges.size() == 3);
    auto edge = [&](std::size_t i) {
      return std::tuple(crn.species_name(g.edges[i].from), crn.species_name(g.edges[i].to),
                        crn.reaction(g.edges[i].reaction).label);
    };
    CHECK(edge(0) == std::tuple("S8", "S9", "r10"));
    CHECK(edge(1) == std::tuple("S9", "S8", "r11"));
    CHECK(edge(2) == std::tuple("S9", "S8", "r12"));
  }
  SUBCASE("empty subset gives the empty graph") {
    const SpeciesGraph g = species_graph(crn, {});
    CHECK(g.nodes.empty());
    CHECK(g.edges.empty());
  }
  SUBCASE("unknown species are rejected") {
    CHECK_THROWS_AS(species_graph(crn, {42}), DomainError);
  }
  SUBCASE("self-loops appear when a species sits on both sides") {
    const Crn loop = Crn::parse_text("r1: A + B -> A + C\n");
    const SpeciesGraph g = species_graph(loop);
    bool has_self = false;
    for (const auto& e : g.edges) has_self = has_self || (e.from == e.to);
    CHECK(has_self);
  }
  SUBCASE("same species graph for different stoichiometry") {
    const Crn r1 = Crn::parse_text(testutil::kSystemR1);
    const Crn r2 = Crn::parse_text(testutil::kSystemR2);
    const SpeciesGraph g1 = species_graph(r1);
    const SpeciesGraph g2 = species_graph(r2);
    REQUIRE(g1.edges.size() == g2.edges.size());
    for (std::size_t i = 0; i < g1.edges.size(); ++i) {
      CHECK(g1.edges[i].from == g2.edges[i].from);
      CHECK(g1.edges[i].to == g2.edges[i].to);
      CHECK(g1.edges[i].reaction == g2.edges[i].reaction);
    }
  }
}

TEST_CASE("classification of the reference subsets") {
  const Crn crn = testutil::main_example();

  SUBCASE("cut with two connected components") {
    const auto cls = classify(crn, ids(crn, {"S1", "S4", "S5", "S6", "S8", "S9"}));
    CHECK(cls.cut);
    CHECK(cls.full);
    CHECK(cls.non_interacting);
    REQUIRE(cls.connected_components.size() == 2);
    CHECK(cls.connected_components[0] == ids(crn, {"S1", "S4", "S5", "S6"}));
    CHECK(cls.connected_components[1] == ids(crn, {"S8", "S9"}));
    CHECK(cls.strongly_connected[0]);
    CHECK(cls.strongly_connected[1]);
  }
  SUBCASE("connected cut") {
    const auto cls = classify(crn, ids(crn, {"S2", "S4", "S6", "S7", "S9"}));
    CHECK(cls.cut);
    CHECK(cls.connected_components.size() == 1);
  }
  SUBCASE("non-interacting but not full") {
    const auto cls = classify(crn, ids(crn, {"S4", "S5", "S6", "S7", "S9"}));
    CHECK(cls.non_interacting);
    CHECK_FALSE(cls.full);
    CHECK_FALSE(cls.cut);
    CHECK(cls.missing_reaction);
  }
  SUBCASE("full but interacting") {
    const auto cls = classify(crn, ids(crn, {"S2", "S3", "S4", "S5", "S6", "S7", "S9"}));
    CHECK(cls.full);
    CHECK_FALSE(cls.non_interacting);
    REQUIRE(cls.interacting_pair);
    CHECK(crn.species_name(cls.interacting_pair->first) == "S2");
    CHECK(crn.species_name(cls.interacting_pair->second) == "S3");
  }
  SUBCASE("empty subset is rejected") {
    CHECK_THROWS_AS(classify(crn, {}), std::invalid_argument);
  }
  SUBCASE("degree-two violation is diagnosed") {
    const Crn intro = testutil::intro_example();
    const auto cls = classify(intro, ids(intro, {"B"}));
    CHECK_FALSE(cls.non_interacting);
    REQUIRE(cls.coefficient_violation);
    CHECK(intro.species_name(cls.coefficient_violation->species) == "B");
    CHECK(cls.coefficient_violation->coefficient == 2);
    const std::string msg = non_interacting_violation_message(intro, cls);
    CHECK(msg.find("degree 2") != std::string::npos);
  }
}

TEST_CASE("spanning tree enumeration") {
  SUBCASE("two-node graph") {
    LabeledDigraph g;
    SymbolTable t;
    const Sym a = t.add(SymKind::RateConst, "a");
    g.node_names = {"A", "B"};
    g.edges.push_back({0, 1, Poly::symbol(a)});
    const auto at_b = spanning_trees_rooted(g, 1);
    REQUIRE(at_b.size() == 1);
    CHECK(tree_product(g, at_b[0]) == Poly::symbol(a));
    CHECK(spanning_trees_rooted(g, 0).empty());
  }
  SUBCASE("triangle matches the Laplacian minor") {
    LabeledDigraph g;
    SymbolTable t;
    g.node_names = {"A", "B", "C"};
    g.edges.push_back({0, 1, Poly::symbol(t.add(SymKind::RateConst, "a"))});
    g.edges.push_back({1, 2, Poly::symbol(t.add(SymKind::RateConst, "b"))});
    g.edges.push_back({2, 0, Poly::symbol(t.add(SymKind::RateConst, "c"))});
    const PolyMatrix lap = laplacian(g);
    for (std::uint32_t root = 0; root < 3; ++root) {
      const Poly sum = tree_sum_rooted(g, root);
      CHECK(sum.term_count() == 1);
      for (std::size_t i = 0; i < 3; ++i) CHECK(sum == signed_minor(lap, i, root));
    }
  }
  SUBCASE("node cap") {
    LabeledDigraph g;
    for (int i = 0; i < 11; ++i) g.node_names.push_back("n");
    CHECK_THROWS_AS(spanning_trees_rooted(g, 0), std::invalid_argument);
  }
}

TEST_CASE("laplacian construction") {
  const Crn crn = testutil::main_example();
  PolyBuilder P{crn};

  SUBCASE("single edge") {
    LabeledDigraph g;
    SymbolTable t;
    const Sym a = t.add(SymKind::RateConst, "a");
    g.node_names = {"A", "B"};
    g.edges.push_back({0, 1, Poly::symbol(a)});
    const PolyMatrix lap = laplacian(g);
    CHECK(lap.at(0, 0) == -Poly::symbol(a));
    CHECK(lap.at(0, 1) == Poly::zero());
    CHECK(lap.at(1, 0) == Poly::symbol(a));
    CHECK(lap.at(1, 1) == Poly::zero());
  }
  SUBCASE("ghat of the two-species cut collapses parallel edges") {
    const LaplacianSystem sys = build_system(crn, ids(crn, {"S8", "S9"}));
    REQUIRE(sys.is_cut());
    CHECK(sys.A.at(0, 0) == -(P.k(10) * P.c(7)));
    CHECK(sys.A.at(0, 1) == P.k(11) + P.k(12));
    CHECK(sys.A.at(1, 0) == P.k(10) * P.c(7));
    CHECK(sys.A.at(1, 1) == -(P.k(11) + P.k(12)));
  }
  SUBCASE("ghat of the four-species cut reproduces the reference matrix") {
    const LaplacianSystem sys = build_system(crn, ids(crn, {"S1", "S4", "S5", "S6"}));
    REQUIRE(sys.is_cut());
    // Rows and columns ordered S1, S4, S5, S6.
    PolyMatrix want(4, 4);
    want.at(0, 0) = -(P.k(1) * P.c(2)) - P.k(3) * P.c(3);
    want.at(0, 1) = P.k(2);
    want.at(0, 2) = P.k(4);
    want.at(0, 3) = P.k(9);
    want.at(1, 0) = P.k(1) * P.c(2);
    want.at(1, 1) = -P.k(2) - P.k(5) * P.c(3);
    want.at(1, 2) = Poly::zero();
    want.at(1, 3) = P.k(6);
    want.at(2, 0) = P.k(3) * P.c(3);
    want.at(2, 1) = Poly::zero();
    want.at(2, 2) = -P.k(4) - P.k(7) * P.c(2);
    want.at(2, 3) = P.k(8);
    want.at(3, 0) = Poly::zero();
    want.at(3, 1) = P.k(5) * P.c(3);
    want.at(3, 2) = P.k(7) * P.c(2);
    want.at(3, 3) = -P.k(6) - P.k(8) - P.k(9);
    CHECK(sys.A == want);

    // Column sums vanish: the conservation law in action.
    for (std::size_t j = 0; j < 4; ++j) {
      Poly colsum;
      for (std::size_t i = 0; i < 4; ++i) colsum += sys.A.at(i, j);
      CHECK(colsum.is_zero());
    }
  }
  SUBCASE("self-loops are rejected") {
    LabeledDigraph g;
    g.node_names = {"A"};
    g.edges.push_back({0, 0, Poly::one()});
    CHECK_THROWS_AS(laplacian(g), std::invalid_argument);
  }
}

TEST_CASE("sigma_6 equals the rooted tree sum of the cut graph") {
  const Crn crn = testutil::main_example();
  PolyBuilder P{crn};
  const LaplacianSystem sys = build_system(crn, ids(crn, {"S1", "S4", "S5", "S6"}));
  const auto trees = spanning_trees_rooted(sys.ghat, 3);  // S6 is node 3
  CHECK(trees.size() == 4);
  Poly sum;
  for (const auto& tree : trees) sum += tree_product(sys.ghat, tree);
  const Poly sigma6 = (P.k(1) * P.k(4) * P.k(5) + P.k(2) * P.k(3) * P.k(7)) * P.c(2) * P.c(3) +
                      P.k(1) * P.k(5) * P.k(7) * P.c(2) * P.c(2) * P.c(3) +
                      P.k(3) * P.k(5) * P.k(7) * P.c(2) * P.c(3) * P.c(3);
  CHECK(sum == sigma6);
}

TEST_CASE("matrix-tree theorem on random labeled digraphs") {
  std::mt19937_64 rng(20121225);
  SymbolTable table;
  for (unsigned iter = 0; iter < 60; ++iter) {
    const LabeledDigraph g = random_graph(rng, table, iter);
    const PolyMatrix lap = laplacian(g);
    const std::size_t n = g.node_count();
    for (std::uint32_t root = 0; root < n; ++root) {
      const Poly sum = tree_sum_rooted(g, root);
      CHECK(sum == signed_minor(lap, root, root));
      CHECK(sum == signed_minor(lap, 0, root));
    }
  }
}

TEST_CASE("fullness and non-interaction under unions") {
  const Crn crn = testutil::main_example();
  std::mt19937_64 rng(8675309);
  std::uniform_int_distribution<unsigned> coin(0, 1);
  for (int iter = 0; iter < 120; ++iter) {
    std::vector<std::uint32_t> s1, s2;
    for (std::uint32_t sp = 0; sp < crn.species_count(); ++sp) {
      if (coin(rng)) s1.push_back(sp);
      if (coin(rng)) s2.push_back(sp);
    }
    if (s1.empty() || s2.empty()) continue;
    std::vector<std::uint32_t> both = s1;
    both.insert(both.end(), s2.begin(), s2.end());
    std::sort(both.begin(), both.end());
    both.erase(std::unique(both.begin(), both.end()), both.end());

    const auto c1 = classify(crn, s1), c2 = classify(crn, s2), cu = classify(crn, both);
    if (c1.full && c2.full) CHECK(cu.full);
    if (cu.non_interacting) {
      CHECK(c1.non_interacting);
      CHECK(c2.non_interacting);
    }
  }
}

TEST_CASE("labels appear at most once in non-interacting subgraphs") {
  const Crn crn = testutil::main_example();
  std::mt19937_64 rng(31459);
  std::uniform_int_distribution<unsigned> coin(0, 1);
  for (int iter = 0; iter < 120; ++iter) {
    std::vector<std::uint32_t> subset;
    for (std::uint32_t sp = 0; sp < crn.species_count(); ++sp)
      if (coin(rng)) subset.push_back(sp);
    if (subset.empty()) continue;
    if (!classify(crn, subset).non_interacting) continue;
    const SpeciesGraph g = species_graph(crn, subset);
    std::map<std::uint32_t, int> label_count;
    for (const auto& e : g.edges) ++label_count[e.reaction];
    for (const auto& [r, count] : label_count) CHECK(count == 1);
  }
}

TEST_CASE("semiflow supports give full graphs, minimal positive ones connected") {
  for (const char* text : {testutil::kMainExample, testutil::kIntroExample,
                           testutil::kTriangle, testutil::kReversiblePair}) {
    const Crn crn = Crn::parse_text(text);
    for (const auto& w : semiflow_basis(crn)) {
      const auto cls = classify(crn, w.support());
      if (w.is_nonneg()) {
        CHECK(cls.full);
        if (is_minimal(crn, w.coeffs)) CHECK(cls.connected_components.size() == 1);
      }
    }
  }
}

TEST_CASE("a minimal semiflow with mixed signs can have a disconnected support") {
  // X and Y are only ever consumed together; the difference X - Y is a
  // minimal semiflow, yet its support graph has no edges. Connectivity of
  // minimal supports needs non-negative coefficients.
  const Crn crn = Crn::parse_text("r1: X + Y -> Z\n");
  RatVec omega(3, 0);
  omega[crn.require_species("X")] = 1;
  omega[crn.require_species("Y")] = -1;
  CHECK(is_semiflow(crn, omega));
  CHECK(is_minimal(crn, omega));
  const auto cls = classify(crn, testutil::ids(crn, {"X", "Y"}));
  CHECK(cls.connected_components.size() == 2);
}

TEST_CASE("cut classification agrees with the semiflow test") {
  const Crn crn = testutil::main_example();
  // Every non-empty subset of the nine species: graph-based cut flag vs the
  // indicator vector being a semiflow.
  for (std::uint32_t mask = 1; mask < (1u << 9); ++mask) {
    std::vector<std::uint32_t> subset;
    RatVec indicator(crn.species_count(), 0);
    for (std::uint32_t sp = 0; sp < 9; ++sp)
      if (mask & (1u << sp)) {
        subset.push_back(sp);
        indicator[sp] = 1;
      }
    const auto cls = classify(crn, subset);
    if (!cls.non_interacting) continue;
    CHECK(cls.cut == is_semiflow(crn, indicator));
  }
}

TEST_CASE("maximal non-interacting subsets") {
  const Crn crn = testutil::main_example();
  const auto subsets = maximal_non_interacting_subsets(crn);
  // The largest one is the six-species set used throughout.
  std::size_t largest = 0;
  for (const auto& s : subsets) largest = std::max(largest, s.size());
  CHECK(largest == 6);
  bool found = false;
  for (const auto& s : subsets)
    found = found || s == ids(crn, {"S1", "S4", "S5", "S6", "S8", "S9"});
  CHECK(found);
  // Every reported subset is non-interacting and maximal.
  for (const auto& s : subsets) {
    CHECK(classify(crn, s).non_interacting);
    for (std::uint32_t sp = 0; sp < crn.species_count(); ++sp) {
      if (std::binary_search(s.begin(), s.end(), sp)) continue;
      auto bigger = s;
      bigger.push_back(sp);
      std::sort(bigger.begin(), bigger.end());
      CHECK_FALSE(classify(crn, bigger).non_interacting);
    }
  }
}

TEST_CASE("dot export is deterministic") {
  const Crn crn = Crn::parse_text(testutil::kReversiblePair);
  const std::string dot = to_dot(crn, species_graph(crn), "G");
  CHECK(dot ==
        "digraph G {\n"
        "  n0 [label=\"A\"];\n"
        "  n1 [label=\"B\"];\n"
        "  n0 -> n1 [label=\"r1\"];\n"
        "  n1 -> n0 [label=\"r1_r\"];\n"
        "}\n");
}
