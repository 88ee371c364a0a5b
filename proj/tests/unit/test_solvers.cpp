#include <gtest/gtest.h>

#include <random>

#include "chordal/decomposition.hpp"
#include "chordal/error.hpp"
#include "chordal/generators.hpp"
#include "chordal/hadwiger.hpp"
#include "chordal/topological.hpp"
#include "chordal/treewidth.hpp"
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

TEST(Treewidth, Examples) {
  for (int t = 1; t <= 7; ++t) EXPECT_EQ(treewidth_exact(complete_graph(t)).width, t - 1);
  EXPECT_EQ(treewidth_exact(complete_bipartite_graph(3, 3)).width, 3);
  EXPECT_EQ(treewidth_exact(grid_graph(3, 3)).width, 3);
  EXPECT_EQ(treewidth_exact(grid_graph(4, 4)).width, 4);
  EXPECT_EQ(treewidth_exact(Graph{}).width, -1);
  EXPECT_EQ(treewidth_exact(complete_binary_tree(3)).width, 1);
}

TEST(Treewidth, CapIsEnforced) {
  EXPECT_THROW(treewidth_exact(path_graph(19)), Error);
  EXPECT_EQ(treewidth_exact(path_graph(19), 19).width, 1);
}

TEST(Treewidth, WitnessValidates) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.3);
    auto r = treewidth_exact(g);
    EXPECT_EQ(validate_decomposition(g, r.decomposition), r.width);
  }
}

TEST(Treewidth, SparseSolverAgreesWithSubsetDp) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 150; ++i) {
    int n = 1 + static_cast<int>(rng() % 15);
    Graph g = random_graph(rng, n, 0.1 + 0.05 * static_cast<double>(rng() % 8));
    auto dp = treewidth_exact(g);
    auto sp = treewidth_sparse_exact(g);
    ASSERT_EQ(sp.width, dp.width) << "n=" << n << " m=" << g.num_edges();
    EXPECT_EQ(validate_decomposition(g, sp.decomposition), sp.width);
    EXPECT_LE(treewidth_lower_bound(g), dp.width);
    EXPECT_GE(treewidth_min_fill(g).width, dp.width);
  }
}

TEST(Treewidth, SparseSolverOnLargerGrids) {
  EXPECT_EQ(treewidth_sparse_exact(grid_graph(5, 5)).width, 5);
  EXPECT_EQ(treewidth_sparse_exact(grid_graph(3, 12)).width, 3);
  EXPECT_EQ(treewidth_sparse_exact(cycle_graph(40)).width, 2);
}

TEST(Hadwiger, Examples) {
  auto tree = hadwiger_exact(complete_binary_tree(2));
  EXPECT_EQ(tree.value, 2);
  for (int t = 1; t <= 4; ++t) {
    Graph ktt = complete_bipartite_graph(t, t);
    auto r = hadwiger_exact(ktt);
    EXPECT_EQ(r.value, t + 1) << t;
    EXPECT_TRUE(validate_minor_certificate(ktt, complete_graph(r.value), r.certificate));
  }
  Graph grid = grid_graph(3, 3);
  auto r = hadwiger_exact(grid);
  EXPECT_EQ(r.value, oracle::hadwiger_by_partitions(grid));
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(hadwiger_exact(Graph{}).value, 0);
  EXPECT_EQ(hadwiger_exact(Graph::on_range(3, {})).value, 1);
}

TEST(Hadwiger, CapIsEnforced) { EXPECT_THROW(hadwiger_exact(path_graph(15)), Error); }

TEST(Hadwiger, MatchesPartitionOracleOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 120; ++i) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.2 + 0.1 * static_cast<double>(rng() % 6));
    auto r = hadwiger_exact(g);
    ASSERT_EQ(r.value, oracle::hadwiger_by_partitions(g));
    EXPECT_TRUE(validate_minor_certificate(g, complete_graph(r.value), r.certificate));
  }
}

TEST(Hajos, Examples) {
  EXPECT_EQ(hajos_exact(path_graph(4)).value, 2);
  EXPECT_EQ(hajos_exact(cycle_graph(5)).value, 3);
  auto k5 = hajos_exact(complete_graph(5));
  EXPECT_EQ(k5.value, 5);
  EXPECT_TRUE(validate_topological_minor_certificate(complete_graph(5), complete_graph(5), k5.certificate));
  EXPECT_EQ(hajos_exact(complete_bipartite_graph(3, 3)).value, 4);
  EXPECT_THROW(hajos_exact(path_graph(13)), Error);
}

TEST(Hajos, MatchesLabellingOracleOnRandomGraphs) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 120; ++i) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 7), 0.25 + 0.1 * static_cast<double>(rng() % 6));
    auto r = hajos_exact(g);
    ASSERT_EQ(r.value, oracle::hajos_by_labellings(g));
    EXPECT_TRUE(validate_topological_minor_certificate(g, complete_graph(r.value), r.certificate));
  }
}

TEST(TopologicalMinor, K24InSmallGraphs) {
  Graph k24 = complete_bipartite_graph(2, 4);
  EXPECT_TRUE(find_topological_minor(k24, k24));
  EXPECT_FALSE(find_topological_minor(complete_bipartite_graph(2, 3), k24));
  auto cert = find_topological_minor(complete_graph(6), k24);
  ASSERT_TRUE(cert);
  EXPECT_TRUE(validate_topological_minor_certificate(complete_graph(6), k24, *cert));
}

TEST(InvariantChain, HajosHadwigerTreewidth) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.4);
    int tw = treewidth_exact(g).width;
    int h = hadwiger_exact(g).value;
    int ht = hajos_exact(g).value;
    EXPECT_LE(ht, h);
    EXPECT_LE(h, tw + 1);
  }
}

TEST(TreewidthOracle, ExhaustiveSmallGraphs) {
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : oracle::nonisomorphic_graphs(n)) {
      ASSERT_EQ(treewidth_exact(g).width, oracle::treewidth_by_orderings(g));
    }
  }
}
