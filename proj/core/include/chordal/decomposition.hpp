#pragma once

#include <map>
#include <span>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

/// Bags indexed by the nodes of `tree`. Bag contents are kept sorted.
struct TreeDecomposition {
  Graph tree;
  std::map<int, std::vector<VertexId>> bags;

  int width() const;
  const std::vector<VertexId>& bag(int node) const { return bags.at(node); }
};

/// Checks that `td.tree` is a tree (a forest with one node per bag is
/// rejected), that every vertex and every edge of `g` lies in some bag, and
/// that the nodes holding any one vertex induce a connected subtree. Returns the
/// width. Throws Error(kViolatedAxiom) naming the first failing node, edge or
/// vertex. An empty graph is decomposed by an empty tree of width -1.
int validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// Non-throwing variant.
bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td);

/// Decomposition induced by an elimination ordering: the bag of v holds v and
/// its later neighbours in the filled graph, and hangs below the earliest of
/// those neighbours. Node ids are positions in `order`. Roots of separate
/// components are chained so the result is a single tree.
TreeDecomposition decomposition_from_ordering(const Graph& g, std::span<const VertexId> order);

/// Path decomposition from a bag sequence; node i carries bags[i] and nodes
/// i, i+1 are adjacent.
TreeDecomposition path_decomposition(std::vector<std::vector<VertexId>> bags);

}  // namespace chordal
