#pragma once

#include <span>
#include <utility>
#include <vector>

#include "chordal/drawing.hpp"
#include "chordal/geometry.hpp"
#include "chordal/planarisation.hpp"
#include "chordal/report.hpp"

namespace chordal {

/// Open set of ray directions strictly between `start` and `end`, turning
/// counterclockwise; its angular width is below pi.
struct AngularInterval {
  Point start;
  Point end;

  bool contains(const Point& direction) const;
  /// Closed containment of this interval in `other`.
  bool subset_of(const AngularInterval& other) const;
};

struct ReferencePoint {
  int face = -1;
  Point point;
};

/// Face at maximum M_D-distance from the outer face (smallest id on ties) and
/// the centroid of its boundary vertices. If the centroid lies on a line
/// through two drawn vertices it moves a fraction 2^-k of the way towards a
/// boundary vertex (then towards midpoints of consecutive boundary vertices),
/// taking the first target and k >= 1 that clear every such line. Throws
/// Error(kNoInteriorFace) when P_D has a single face.
ReferencePoint reference_point(const Planarisation& p, const MapGraph& m);
ReferencePoint reference_point(const CircularDrawing& d);

/// Directions of rays from `p` that cross the open chord of edge `e`. Throws
/// Error(kPointOnChord) if p lies on the chord or its supporting line.
AngularInterval edge_interval(const CircularDrawing& d, const Point& p, EdgeId e);

/// True iff the open intervals cover every direction.
bool is_dominant(std::span<const AngularInterval> intervals);

/// Minimum and maximum number of intervals containing a direction, over all
/// directions ({0, 0} for no intervals).
std::pair<int, int> coverage_range(std::span<const AngularInterval> intervals);

/// Minimum number of chords crossed by a ray from p. Throws
/// Error(kDegenerateGeometry) if p is collinear with two drawn vertices.
int min_ray_coverage(const CircularDrawing& d, const Point& p);
int min_ray_coverage(const CircularDrawing& d, const Point& p, std::span<const EdgeId> edges);

/// Keeps the edges maximal in `edges` (no other interval contains theirs),
/// then deletes edges in ascending id while the set stays dominant. Throws
/// Error(kNotDominant) if `edges` is not dominant.
std::vector<EdgeId> peel_layer(std::span<const EdgeId> edges, const CircularDrawing& d, const Point& p);

struct CycleLayers {
  Point center;
  int deepest_face = -1;
  std::vector<std::vector<EdgeId>> layers;
};

/// Peels t layers from the full edge set around the reference point. Throws
/// Error(kRadiusTooSmall) if rad(M_D) < 2t and Error(kInternalContractViolation)
/// if a produced layer breaks the extraction contract.
CycleLayers extract_cycle_layers(const CircularDrawing& d, int t);

/// Induced cycles, >= 2 neighbours from each layer into every later layer,
/// <= 4 neighbours of any X_D vertex in each layer. Failures are entries.
Report validate_cycle_layers(const CrossingGraph& x, const CycleLayers& layers);

/// {"face": id, "center": ["p/q", "p/q"], "layers": [[edge ids], ...]}
Json to_json(const CycleLayers& c);
CycleLayers cycle_layers_from_json(const Json& j);

}  // namespace chordal
