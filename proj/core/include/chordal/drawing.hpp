#pragma once

#include <map>
#include <span>
#include <vector>

#include "chordal/geometry.hpp"
#include "chordal/graph.hpp"

namespace chordal {

/// Vertices on the unit circle, edges as straight chords. Vertex v sits at
/// circle_point(anchor(v)); anchors increase strictly along `order`.
class CircularDrawing {
 public:
  CircularDrawing() = default;
  /// Throws Error(kNotAPermutation) if `order` is not a permutation of the
  /// vertices, Error(kDegenerateGeometry) if anchors are missing or not
  /// strictly increasing along `order`.
  CircularDrawing(Graph graph, std::vector<VertexId> order, std::map<VertexId, Rational> anchors);

  const Graph& graph() const { return graph_; }
  const std::vector<VertexId>& order() const { return order_; }
  const std::map<VertexId, Rational>& anchors() const { return anchors_; }
  const Rational& anchor(VertexId v) const { return anchors_.at(v); }
  Point position(VertexId v) const { return circle_point(anchor(v)); }
  /// Position of `v` in order().
  int slot(VertexId v) const { return slot_.at(v); }
  /// Endpoint-interleaving test for two edges of the drawn graph.
  bool chords_cross(EdgeId e, EdgeId f) const;

  friend bool operator==(const CircularDrawing& a, const CircularDrawing& b) {
    return a.graph_ == b.graph_ && a.graph_.labels() == b.graph_.labels() && a.order_ == b.order_ &&
           a.anchors_ == b.anchors_;
  }

 private:
  Graph graph_;
  std::vector<VertexId> order_;
  std::map<VertexId, Rational> anchors_;
  std::map<VertexId, int> slot_;
};

/// Anchors 1, 2, ..., n along `order`. Whenever three chords meet in one
/// interior point, the anchor of the largest vertex id among their endpoints
/// moves up by 2^-j for the first j >= 1 that keeps the anchors increasing and
/// lowers the number of concurrent chord triples; this repeats until no triple
/// point remains.
/// Throws Error(kNotAPermutation).
CircularDrawing make_circular(const Graph& g, const std::vector<VertexId>& order);

/// Same genericity repair applied to caller-supplied anchors.
CircularDrawing make_generic(CircularDrawing d);

/// Straight-line drawing with rational coordinates. When `linear` is set,
/// every vertex lies on the x-axis and edges are read as upper semicircles.
class StraightLineDrawing {
 public:
  StraightLineDrawing() = default;
  /// Validates the drawing invariants; throws Error(kDuplicateCoordinate) for
  /// repeated positions (repeated x for linear drawings) and
  /// Error(kDegenerateGeometry) for vertices inside edges, overlapping edges
  /// or three edges through one interior point.
  StraightLineDrawing(Graph graph, std::map<VertexId, Point> coords, bool linear = false);

  const Graph& graph() const { return graph_; }
  const std::map<VertexId, Point>& coords() const { return coords_; }
  const Point& position(VertexId v) const { return coords_.at(v); }
  bool linear() const { return linear_; }

  friend bool operator==(const StraightLineDrawing& a, const StraightLineDrawing& b) {
    return a.graph_ == b.graph_ && a.graph_.labels() == b.graph_.labels() && a.coords_ == b.coords_ &&
           a.linear_ == b.linear_;
  }

 private:
  Graph graph_;
  std::map<VertexId, Point> coords_;
  bool linear_ = false;
};

/// Crossing graph X_D: vertex ids are edge ids of the drawn graph.
struct CrossingGraph {
  Graph graph;
  /// Exact crossing point for every crossing pair (empty for linear drawings,
  /// whose semicircle crossings are not rational).
  std::map<Edge, Point> crossing_points;
};

/// Circular drawings: adjacency by interleaving, points by exact chord
/// intersection. Throws Error(kDegenerateGeometry) if three chords share a
/// crossing point.
CrossingGraph crossing_graph(const CircularDrawing& d);
/// Straight-line drawings: exact segment intersection; linear drawings use the
/// semicircle interleaving rule.
CrossingGraph crossing_graph(const StraightLineDrawing& d);

/// X_D of the drawing of g with vertices in the given circular order, by
/// interleaving only. Used by the exhaustive enumeration checks.
Graph crossing_graph_of_order(const Graph& g, std::span<const VertexId> order);

/// Circular drawing with the same crossing graph: vertices in increasing x,
/// anchors by make_circular. Throws Error(kInvalidParameter) if `d` is not
/// linear and Error(kDuplicateCoordinate) for repeated x.
CircularDrawing wrap_linear(const StraightLineDrawing& d);

/// Straight-line view of a circular drawing (vertex coordinates on the circle).
StraightLineDrawing as_straight_line(const CircularDrawing& d);

}  // namespace chordal
