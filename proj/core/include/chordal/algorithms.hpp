#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

/// BFS distances from `source`; unreachable vertices are absent.
std::map<VertexId, int> bfs_distances(const Graph& g, VertexId source);

/// Multi-source variant: distance to the nearest source.
std::map<VertexId, int> bfs_distances(const Graph& g, const std::vector<VertexId>& sources);

/// Throws Error(kDisconnectedGraph) if some vertex is unreachable from `v`.
int eccentricity(const Graph& g, VertexId v);

/// Minimum eccentricity. Throws Error(kDisconnectedGraph) for disconnected
/// graphs and Error(kInvalidParameter) for the empty graph.
int graph_radius(const Graph& g);

struct Degeneracy {
  int value = 0;
  /// Removal order; each vertex had at most `value` remaining neighbours.
  std::vector<VertexId> order;
};

/// Repeatedly removes a minimum-degree vertex, smallest id first.
Degeneracy degeneracy(const Graph& g);

/// A: s vertices, B: t vertices, all s*t cross pairs adjacent.
using BicliqueWitness = std::pair<std::vector<VertexId>, std::vector<VertexId>>;

/// Finds a (not necessarily induced) K_{s,t} subgraph, lexicographically
/// first choice of the smaller side. Throws Error(kInvalidParameter) if s or t
/// is below 1.
std::optional<BicliqueWitness> has_kst_subgraph(const Graph& g, int s, int t);

/// Size of a largest clique and one such clique (sorted).
std::vector<VertexId> maximum_clique(const Graph& g);

}  // namespace chordal
