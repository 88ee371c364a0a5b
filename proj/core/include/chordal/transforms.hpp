#pragma once

#include <map>
#include <optional>
#include <utility>

#include "chordal/caps.hpp"
#include "chordal/decomposition.hpp"
#include "chordal/drawing.hpp"
#include "chordal/planarisation.hpp"
#include "chordal/report.hpp"

namespace chordal {

/// Original edge id -> (tail, head).
using Orientation = std::map<EdgeId, std::pair<VertexId, VertexId>>;

/// The drawn graph G recovered from a planarisation: non-dummy vertices, one
/// edge per original edge id.
Graph original_graph(const Planarisation& p);

/// X_D recovered from the dummy vertices; vertex ids are original edge ids.
Graph crossing_graph_of(const Planarisation& p);

/// Each original edge oriented from its smaller to its larger endpoint.
Orientation default_orientation(const Planarisation& p);

/// Tree decomposition of G from one of P_D: every dummy vertex is replaced by
/// the heads of its two crossing edges. Same tree, width <= 2w + 1.
/// Throws Error(kInvalidInputDecomposition) if `td` does not decompose
/// p.plane_graph, Error(kInvalidParameter) if `orientation` misses an edge or
/// does not match its endpoints.
TreeDecomposition td_lift_to_graph(const TreeDecomposition& td, const Planarisation& p,
                                   const Orientation& orientation);
TreeDecomposition td_lift_to_graph(const TreeDecomposition& td, const Planarisation& p);

/// Tree decomposition of X_D from one of P_D: dummies become their edge pair,
/// original vertices are dropped. Edges without crossings get a leaf node
/// with bag {e} below the smallest node; leaf ids continue after the largest
/// node id. Throws Error(kInvalidInputDecomposition).
TreeDecomposition td_lift_to_crossing(const TreeDecomposition& td, const Planarisation& p);

struct FaceLabeling {
  /// Face id of p -> distance from root_face in M_G.
  std::map<int, int> dist0;
  std::map<VertexId, int> rho;
  int root_face = 0;
  VertexId root_vertex = -1;
  /// Face id of p -> v_F, its boundary vertex of smallest rho (then id).
  std::map<int, VertexId> face_vertex;
};

struct Triangulation {
  /// Same vertices and coordinates as the input; added edges have
  /// edge_origin -1 and no straight-line realisation. Faces are traced from
  /// the rotation; face 0 contains the first dart of the old outer walk.
  Planarisation h;
  FaceLabeling labeling;
  int radius_h = 0;
  int radius_map = 0;
};

/// Triangulates a connected plane graph through its map graph: root face of
/// minimum eccentricity in M_G (smallest id), rho from face distances, then
/// for each face in ascending id an edge from v_F to every boundary vertex not
/// yet adjacent to it, then chords until every face is a triangle (from the
/// smallest-rho corner of the face when possible).
/// Throws Error(kTooSmall) below 3 vertices, Error(kDisconnectedGraph) for
/// disconnected input and Error(kInternalContractViolation) if the result
/// breaks rho-descent, planarity or rad(H) <= rad(M_G) + 1.
Triangulation triangulate_via_map(const Planarisation& p);

/// Independent checks of a triangulation against its input: same vertex set,
/// supergraph, Euler's formula on faces retraced from the rotation, triangular
/// faces, rho-descent at every vertex and the radius bound.
Report validate_triangulation(const Planarisation& p, const Triangulation& t);

struct BoundsOptions {
  Caps caps;
  /// Skip exact values above the caps instead of throwing.
  bool force = false;
  /// Also run the Hadwiger and Hajos chains (each only within its cap).
  bool minor_chain = true;
};

struct WidthBounds {
  int tw_g = -1;
  int tw_x = -1;
  int tw_p = -1;
  int rad_m = 0;
  int rad_h = 0;
  std::optional<int> hadwiger_x;
  std::optional<int> hajos_x;
  Report report;
};

/// Exact tw(G), tw(X_D), tw(P_D) and rad(M_D) with every width/radius
/// inequality for circular drawings, both decomposition lifts (validated,
/// widths checked) and the triangulation radius bound. tw(P_D) uses the
/// sparse exact solver beyond the subset-DP cap. Throws
/// Error(kTooLargeInstance) when G or X_D exceeds caps.treewidth, unless
/// `force` is set.
WidthBounds check_width_bounds(const CircularDrawing& d, const BoundsOptions& options = {});
/// Linear drawings are wrapped first. Other straight-line drawings get every
/// check except the minor chains, which need a circular drawing.
WidthBounds check_width_bounds(const StraightLineDrawing& d, const BoundsOptions& options = {});

/// {"tw_g", "tw_x", "tw_p", "rad_m", "rad_h", "hadwiger_x", "hajos_x", "checks"}
Json to_json(const WidthBounds& b);

}  // namespace chordal
