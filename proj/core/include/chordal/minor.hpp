#pragma once

#include <map>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

/// Branch sets: H-vertex id -> G-vertex ids.
struct MinorCertificate {
  std::map<VertexId, std::vector<VertexId>> model;
};

struct TopologicalMinorCertificate {
  std::map<VertexId, VertexId> branch_vertices;
  /// H-edge -> G-vertex sequence from the image of edge.u to the image of edge.v.
  std::map<Edge, std::vector<VertexId>> paths;
};

/// True iff every H-vertex has a nonempty branch set, branch sets are pairwise
/// disjoint and connected in g, and every H-edge is realised by a G-edge
/// between its branch sets. Throws Error(kDanglingId) for ids outside g or h.
bool validate_minor_certificate(const Graph& g, const Graph& h, const MinorCertificate& cert);

/// True iff branch vertices are distinct, every H-edge has a simple G-path
/// between the right branch vertices, and paths are internally disjoint and
/// avoid all branch vertices internally. Throws Error(kDanglingId) for ids
/// outside g or h.
bool validate_topological_minor_certificate(const Graph& g, const Graph& h,
                                            const TopologicalMinorCertificate& cert);

}  // namespace chordal
