#include <gtest/gtest.h>

#include <random>

#include "chordal/algorithms.hpp"
#include "chordal/decomposition.hpp"
#include "chordal/error.hpp"
#include "chordal/generators.hpp"
#include "chordal/graph.hpp"
#include "chordal/minor.hpp"
#include "oracles.hpp"

using namespace chordal;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::on_range(n, std::move(edges));
}

}  // namespace

TEST(Graph, RejectsSelfLoopsAndDanglingEdges) {
  EXPECT_THROW(Graph({0, 1}, {Edge(0, 0)}), Error);
  EXPECT_THROW(Graph({0, 1}, {Edge(0, 2)}), Error);
  EXPECT_THROW(Graph({0, 1}, {Edge(0, 1), Edge(1, 0)}), Error);
}

TEST(Graph, EdgeIdsFollowLexicographicOrder) {
  Graph g({5, 1, 3}, {Edge(5, 3), Edge(1, 5), Edge(1, 3)});
  EXPECT_EQ(g.edge_id(1, 3), 0);
  EXPECT_EQ(g.edge_id(1, 5), 1);
  EXPECT_EQ(g.edge_id(3, 5), 2);
  EXPECT_FALSE(g.edge_id(1, 1).has_value());
}

TEST(Generators, GridSmallCases) {
  Graph g1 = generate(GraphFamily::kGrid, std::vector<int>{1});
  EXPECT_EQ(g1.num_vertices(), 1);
  EXPECT_EQ(g1.num_edges(), 0);
  Graph g2 = generate(GraphFamily::kGrid, std::vector<int>{2});
  EXPECT_TRUE(oracle::isomorphic(g2, cycle_graph(4)));
  Graph g3 = grid_graph(3, 3);
  EXPECT_TRUE(g3.adjacent(0, 1));
  EXPECT_TRUE(g3.adjacent(1, 4));
  EXPECT_FALSE(g3.adjacent(2, 3));
}

TEST(Generators, InvalidParameters) {
  EXPECT_THROW(generate(GraphFamily::kGrid, std::vector<int>{0}), Error);
  EXPECT_THROW(generate(GraphFamily::kCycle, std::vector<int>{2}), Error);
  EXPECT_THROW(generate(GraphFamily::kComplete, std::vector<int>{-1}), Error);
  EXPECT_THROW(generate(GraphFamily::kCompleteBipartite, std::vector<int>{2}), Error);
}

TEST(Generators, RandomTreeIsDeterministicAndBounded) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph t = random_tree(12, 3, seed);
    EXPECT_TRUE(t.is_tree());
    EXPECT_LE(t.max_degree(), 3);
    EXPECT_EQ(t, random_tree(12, 3, seed));
  }
}

TEST(Generators, CompleteBinaryTree) {
  Graph t = complete_binary_tree(2);
  EXPECT_EQ(t.num_vertices(), 7);
  EXPECT_TRUE(t.is_tree());
  EXPECT_EQ(t.max_degree(), 3);
}

TEST(StrongProduct, IdentityAndCliques) {
  Graph k1 = complete_graph(1);
  Graph p4 = path_graph(4);
  EXPECT_TRUE(oracle::isomorphic(strong_product(k1, p4), p4));
  EXPECT_TRUE(oracle::isomorphic(strong_product(complete_graph(2), complete_graph(2)), complete_graph(4)));
  EXPECT_THROW(strong_product(Graph{}, p4), Error);
}

TEST(StrongProduct, P3TimesK2CountsByCase) {
  Graph g = strong_product(path_graph(3), complete_graph(2));
  // same G-vertex: 3 copies of K_2; same H-vertex: 2 copies of P_3; diagonal: 2 per G-edge
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 3 * 1 + 2 * 2 + 2 * 2);
  EXPECT_EQ(g.num_edges(), 11);
}

TEST(StrongProduct, WithK1IsIsomorphicOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.4);
    EXPECT_TRUE(oracle::isomorphic(strong_product(g, complete_graph(1)), g));
  }
}

TEST(Subdivide, Examples) {
  Graph k3 = complete_graph(3);
  EXPECT_EQ(subdivide(k3, {}), k3);
  EXPECT_EQ(subdivide(k3, {{Edge(0, 1), 0}, {Edge(1, 2), 0}}), k3);
  EXPECT_TRUE(oracle::isomorphic(subdivide(k3, {{Edge(0, 1), 1}}), cycle_graph(4)));
  Graph k23 = complete_bipartite_graph(2, 3);
  std::map<Edge, int> ones;
  for (const Edge& e : k23.edges()) ones[e] = 1;
  Graph s = subdivide(k23, ones);
  EXPECT_EQ(s.num_vertices(), 11);
  EXPECT_EQ(s.num_edges(), 12);
  EXPECT_THROW(subdivide(k23, {{Edge(0, 1), 1}}), Error);
}

TEST(Subdivide, PathsRecordNewIds) {
  auto sub = subdivide_with_paths(path_graph(2), {{Edge(0, 1), 2}});
  EXPECT_EQ(sub.paths.at(Edge(0, 1)), (std::vector<VertexId>{0, 2, 3, 1}));
}

TEST(Degeneracy, Examples) {
  EXPECT_EQ(degeneracy(complete_binary_tree(3)).value, 1);
  EXPECT_EQ(degeneracy(Graph::on_range(4, {})).value, 0);
  EXPECT_EQ(degeneracy(grid_graph(3, 3)).value, 2);
  EXPECT_EQ(degeneracy(complete_graph(5)).value, 4);
}

TEST(Degeneracy, ReplayNeverExceedsValue) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 10), 0.35);
    auto d = degeneracy(g);
    ASSERT_EQ(static_cast<int>(d.order.size()), g.num_vertices());
    std::set<VertexId> removed;
    for (VertexId v : d.order) {
      int remaining = 0;
      for (VertexId w : g.neighbours(v)) remaining += removed.count(w) ? 0 : 1;
      EXPECT_LE(remaining, d.value);
      removed.insert(v);
    }
  }
}

TEST(Radius, Examples) {
  EXPECT_EQ(graph_radius(complete_graph(1)), 0);
  EXPECT_EQ(graph_radius(path_graph(5)), 2);
  EXPECT_EQ(graph_radius(cycle_graph(6)), 3);
  EXPECT_THROW(graph_radius(Graph::on_range(2, {})), Error);
}

TEST(Biclique, Examples) {
  auto w = has_kst_subgraph(complete_bipartite_graph(2, 2), 1, 1);
  ASSERT_TRUE(w);
  EXPECT_TRUE(complete_bipartite_graph(2, 2).adjacent(w->first[0], w->second[0]));
  auto c4 = has_kst_subgraph(cycle_graph(4), 2, 2);
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->first, (std::vector<VertexId>{0, 2}));
  EXPECT_EQ(c4->second, (std::vector<VertexId>{1, 3}));
  EXPECT_FALSE(has_kst_subgraph(complete_bipartite_graph(1, 5), 2, 2));
  auto k37 = has_kst_subgraph(complete_bipartite_graph(3, 7), 7, 3);
  ASSERT_TRUE(k37);
  EXPECT_EQ(k37->first.size(), 7U);
  EXPECT_EQ(k37->second.size(), 3U);
  EXPECT_THROW(has_kst_subgraph(cycle_graph(4), 0, 1), Error);
}

TEST(ValidateDecomposition, SingleBag) {
  Graph g = complete_graph(4);
  TreeDecomposition td = path_decomposition({{0, 1, 2, 3}});
  EXPECT_EQ(validate_decomposition(g, td), 3);
}

TEST(ValidateDecomposition, MissingEdgeIsReported) {
  Graph g = cycle_graph(4);
  TreeDecomposition td = path_decomposition({{0, 1, 2}, {2, 3}});
  try {
    validate_decomposition(g, td);
    FAIL() << "expected violated-axiom";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kViolatedAxiom);
    EXPECT_NE(std::string(e.what()).find("0-3"), std::string::npos);
  }
}

TEST(ValidateDecomposition, DisconnectedOccurrencesAreReported) {
  Graph g = path_graph(3);
  TreeDecomposition td = path_decomposition({{0, 1}, {1, 2}, {0}});
  EXPECT_THROW(validate_decomposition(g, td), Error);
}

TEST(ValidateDecomposition, OrderingDecompositionIsValid) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.3);
    std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_NO_THROW(validate_decomposition(g, decomposition_from_ordering(g, order)));
  }
}

TEST(MinorCertificate, IdentityOverlapAndDangling) {
  Graph g = cycle_graph(5);
  MinorCertificate id;
  for (VertexId v : g.vertices()) id.model[v] = {v};
  EXPECT_TRUE(validate_minor_certificate(g, g, id));

  MinorCertificate k3;
  k3.model[0] = {0, 1};
  k3.model[1] = {2};
  k3.model[2] = {3, 4};
  EXPECT_TRUE(validate_minor_certificate(g, complete_graph(3), k3));
  k3.model[1] = {1, 2};
  EXPECT_FALSE(validate_minor_certificate(g, complete_graph(3), k3));
  k3.model[1] = {9};
  EXPECT_THROW(validate_minor_certificate(g, complete_graph(3), k3), Error);
  MinorCertificate split;
  split.model[0] = {0, 2};
  split.model[1] = {1};
  EXPECT_FALSE(validate_minor_certificate(g, complete_graph(2), split));
}

TEST(TopologicalCertificate, PathsMustBeInternallyDisjoint) {
  Graph g = cycle_graph(5);
  TopologicalMinorCertificate c;
  c.branch_vertices = {{0, 0}, {1, 1}, {2, 2}};
  c.paths[Edge(0, 1)] = {0, 1};
  c.paths[Edge(1, 2)] = {1, 2};
  c.paths[Edge(0, 2)] = {0, 4, 3, 2};
  EXPECT_TRUE(validate_topological_minor_certificate(g, complete_graph(3), c));
  c.paths[Edge(0, 2)] = {0, 1, 2};
  EXPECT_FALSE(validate_topological_minor_certificate(g, complete_graph(3), c));
}

TEST(Oracles, NonisomorphicGraphCounts) {
  const std::vector<std::size_t> expected{1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(oracle::nonisomorphic_graphs(n).size(), expected[static_cast<std::size_t>(n)]);
}
