#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

enum class GraphFamily {
  kGrid,
  kComplete,
  kCompleteBipartite,
  kCompleteBinaryTree,
  kPath,
  kCycle,
  kRandomTree,
};

std::optional<GraphFamily> parse_family(std::string_view name);

/// Named graph families. Id conventions:
///  - grid [n] or [rows, cols]: vertex (r, c) has id r * cols + c (row-major).
///  - complete [n], path [n], cycle [n]: ids 0..n-1 in path/cycle order.
///  - complete_bipartite [a, b]: side A is 0..a-1, side B is a..a+b-1.
///  - complete_binary_tree [h]: heap order, children of i are 2i+1 and 2i+2.
///  - random_tree [size, max_degree]: vertex i > 0 attaches to a uniformly
///    chosen earlier vertex whose degree is still below max_degree.
/// Throws Error(kInvalidParameter) for missing, negative or out-of-range params.
Graph generate(GraphFamily family, std::span<const int> params, std::uint64_t seed = 0);

Graph grid_graph(int rows, int cols);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);
Graph complete_binary_tree(int height);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph random_tree(int size, int max_degree, std::uint64_t seed);

/// Strong product. Vertex (v, w) gets id index(v) * |V(h)| + index(w) and the
/// label "(v,w)". Throws Error(kInvalidParameter) if either factor is empty.
Graph strong_product(const Graph& g, const Graph& h);

struct Subdivision {
  Graph graph;
  /// For every original edge, the vertex sequence from edge.u to edge.v.
  std::map<Edge, std::vector<VertexId>> paths;
};

/// Replaces each edge by a path with counts[edge] internal vertices. Fresh ids
/// start at max_vertex_id() + 1 and are handed out in edge order, from the
/// smaller endpoint towards the larger. Throws Error(kUnknownEdge) for keys
/// that are not edges of g, Error(kInvalidParameter) for negative counts.
Subdivision subdivide_with_paths(const Graph& g, const std::map<Edge, int>& counts);
Graph subdivide(const Graph& g, const std::map<Edge, int>& counts);

}  // namespace chordal
