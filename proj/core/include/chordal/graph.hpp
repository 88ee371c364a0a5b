#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace chordal {

using VertexId = int;
using EdgeId = int;

/// Unordered vertex pair, stored with `u < v`.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(VertexId x) const { return u == x || v == x; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph with stable integer vertex ids.
///
/// Vertices and edges are kept sorted, so an edge id is the position of the
/// edge in lexicographic (u, v) order. Two graphs built from the same vertex
/// and edge sets therefore agree on every edge id. Instances are immutable;
/// use GraphBuilder to assemble one.
class Graph {
 public:
  Graph() = default;

  /// Throws Error(kInvalidGraph) on self-loops, parallel edges, duplicate
  /// vertices or edges with an endpoint outside `vertices`.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges,
        std::map<VertexId, std::string> labels = {});

  /// Vertices 0..n-1 and the given edges.
  static Graph on_range(int n, std::vector<Edge> edges);

  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(VertexId v) const { return index_of(v) >= 0; }
  /// Position of `v` in vertices(), or -1.
  int index_of(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const { return edge_id(a, b).has_value(); }
  std::optional<EdgeId> edge_id(VertexId a, VertexId b) const;
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }

  /// Sorted neighbour list. Throws Error(kDanglingId) for unknown vertices.
  std::span<const VertexId> neighbours(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(neighbours(v).size()); }
  int max_degree() const;
  /// Edge ids incident to `v`, ascending.
  std::vector<EdgeId> incident_edges(VertexId v) const;

  const std::map<VertexId, std::string>& labels() const { return labels_; }
  std::optional<std::string> label(VertexId v) const;

  Graph induced(std::span<const VertexId> keep) const;
  Graph without_vertices(std::span<const VertexId> drop) const;
  VertexId max_vertex_id() const { return vertices_.empty() ? -1 : vertices_.back(); }

  bool is_connected() const;
  bool is_tree() const;
  /// Connected components, each a sorted vertex list, ordered by smallest vertex.
  std::vector<std::vector<VertexId>> components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::map<VertexId, std::string> labels_;
};

/// Incremental construction. Repeated vertices and edges are merged, self
/// loops are rejected.
class GraphBuilder {
 public:
  GraphBuilder& add_vertex(VertexId v);
  GraphBuilder& add_edge(VertexId a, VertexId b);
  GraphBuilder& set_label(VertexId v, std::string label);
  bool has_vertex(VertexId v) const;
  Graph build() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::string> labels_;
};

}  // namespace chordal
