#pragma once

#include <map>
#include <utility>
#include <vector>

#include "chordal/drawing.hpp"
#include "chordal/geometry.hpp"
#include "chordal/graph.hpp"

namespace chordal {

/// Directed edge of a plane graph.
struct Dart {
  VertexId from = 0;
  VertexId to = 0;
  EdgeId edge = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

/// A face with one closed walk per boundary component. A walk lists darts in
/// traversal order (the face lies to the left); a lone vertex is a walk with
/// no darts and `isolated` set.
struct FaceWalk {
  std::vector<Dart> darts;
  VertexId isolated = -1;

  std::vector<VertexId> vertices() const;
};

struct Face {
  std::vector<FaceWalk> walks;

  std::vector<VertexId> vertices() const;
};

/// Plane graph with its rotation system and faces. Built by planarise() from
/// a drawing or by embed_plane() from coordinates.
struct Planarisation {
  Graph plane_graph;
  /// Incident plane-graph edge ids in counterclockwise order.
  std::map<VertexId, std::vector<EdgeId>> rotation;
  /// Dummy vertex -> (e, f) with e < f, the crossing original edges.
  std::map<VertexId, std::pair<EdgeId, EdgeId>> dummy_origin;
  /// Plane-graph edge id -> original edge id it is part of.
  std::vector<EdgeId> edge_origin;
  std::map<VertexId, Point> coords;
  /// Face 0 is the outer face; bounded faces follow in order of their
  /// smallest dart (2 * edge id, +1 for the larger-to-smaller direction).
  std::vector<Face> faces;
  int outer_face = 0;
  /// Largest original vertex id; dummies are numbered above it.
  VertexId original_max_id = -1;

  bool is_dummy(VertexId v) const { return dummy_origin.count(v) > 0; }
  /// Neighbours of v in counterclockwise order.
  std::vector<VertexId> ccw_neighbours(VertexId v) const;
};

/// Rotation system and faces of a straight-line plane graph. Throws
/// Error(kDegenerateGeometry) if two edges cross or overlap.
Planarisation embed_plane(const Graph& g, const std::map<VertexId, Point>& coords);

/// P_D: every crossing becomes a degree-4 dummy vertex. Dummy ids start at
/// max vertex id + 1 and follow the lexicographic order of the crossing edge
/// pairs. Throws Error(kInvalidParameter) for linear drawings (wrap first).
Planarisation planarise(const CircularDrawing& d);
Planarisation planarise(const StraightLineDrawing& d);

struct MapGraph {
  /// Vertex ids are face ids.
  Graph graph;
  int outer_face = 0;
};

/// M_D: faces adjacent iff their boundaries share a plane-graph vertex.
MapGraph map_graph(const Planarisation& p);

/// Checks V - E + W = 2 for each connected component, where W counts the
/// walks of that component over all faces.
bool euler_holds(const Planarisation& p);

}  // namespace chordal
