#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library solvers.

#include <cstdint>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal::oracle {

/// Minimum over all elimination orderings of the largest later-neighbourhood.
int treewidth_by_orderings(const Graph& g);

/// Largest t such that some assignment of vertices to t connected, pairwise
/// adjacent blocks exists (every set partition is tried).
int hadwiger_by_partitions(const Graph& g);

/// Largest t such that for some t branch vertices, every other vertex can be
/// labelled unused or with a K_t edge so that each edge's endpoints connect
/// inside their label class.
int hajos_by_labellings(const Graph& g);

/// All graphs on n vertices (ids 0..n-1), one per isomorphism class.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Canonical adjacency code, equal for isomorphic graphs (n <= 8).
std::vector<std::uint8_t> canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace chordal::oracle
