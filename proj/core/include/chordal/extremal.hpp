#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "chordal/decomposition.hpp"
#include "chordal/graph.hpp"
#include "chordal/minor.hpp"
#include "chordal/serialize.hpp"

namespace chordal {

/// Lists of vertex or edge ids.
using IdSets = std::vector<std::vector<int>>;
using Witness = std::variant<MinorCertificate, TreeDecomposition, IdSets>;

/// A drawing together with the objects that certify its advertised
/// properties. Witnesses are checked by the caller, not on construction.
struct LabeledConstruction {
  std::string name;
  Drawing drawing;
  std::map<std::string, Witness> witnesses;
  /// Derived graphs that are not the drawn graph (e.g. a contraction).
  std::map<std::string, Graph> graphs;
  /// Recorded numeric facts, such as a computed radius.
  std::map<std::string, long> values;
  std::vector<std::string> notes;

  const Graph& graph() const;
};

/// n x n grid (row-major ids) drawn row by row. Witness
/// "E_path_decomposition": node i holds the edges incident to row i, a path
/// decomposition of X_D.
LabeledConstruction grid_row_drawing(int n);

/// Linear drawing of G_t: path P_0 on x = 1..t, paths P_s on
/// s + 2^-s, s + 3 * 2^-s, ..., t - 2^-s, and for r < s an edge e_{r,s}
/// spanning [s + 2^-r - 2^-s, s + 2^-r]. Vertex ids follow x. Witnesses:
/// "kt_minor" (branch set r = V(P_r)), "paths" (V(P_s)), "horizontal"
/// ([r, s, edge id] per e_{r,s}).
LabeledConstruction two_degenerate_expander(int t);

/// 2t disjoint chords a_i = p_i q_i, b_j = m_j r_j on 4t points in the order
/// p_1..p_t, m_1..m_t, q_t..q_1, r_t..r_1. Point ids are positions, so edge
/// ids 0..t-1 are a_1..a_t and t..2t-1 are b_1..b_t. Witness "bipartition".
LabeledConstruction ktt_chord_diagram(int t);

/// Tree plus an apex (id max + 1) adjacent to every tree vertex, drawn with
/// the apex first and the tree in DFS preorder. Witness
/// "width2_decomposition". Throws Error(kNotATree), Error(kDegreeExceeded)
/// for degree > 3.
LabeledConstruction tree_plus_dominant(const Graph& tree);

/// T strong-product K_m drawn by expanding each vertex of a crossing-free
/// DFS-preorder drawing of T into m consecutive points. Vertex (v, i) has id
/// index(v) * m + i. Witness "Wv_decomposition": over the tree T, node v holds
/// the edges incident to some (v, i).
LabeledConstruction product_drawing(const Graph& tree, int m);

/// Straight-line drawing D_1 of G_1 (horizontal paths P_1..P_t crossed by
/// vertical edges, subdivided so that every horizontal edge is crossed at
/// most once, plus the top path P_{t+1}). Graphs: "contracted" (P_{t+1}
/// contracted to an apex) and "contracted_crossing_graph" (X_D of the
/// contraction, on its edge ids). Witnesses: "star_forest" (components of
/// X_{D_1} with an edge), "radius1" ([[apex]]), "kt1_minor" (on the
/// contraction), "horizontal_paths".
LabeledConstruction star_forest_construction(int t);

/// Matching on 2 * m * layers points: ring k consists of m chords, each
/// crossing exactly its two cyclic neighbours in the ring, rotated by a
/// quarter of a slot per ring and spanning wider arcs for later rings.
/// Witness "rings"; value "map_radius" holds rad(M_D).
LabeledConstruction nested_polygon_drawing(int layers, int m);

/// K_{2,n} with x = 0, y = 1, middle vertices 2..n+1, and all its
/// subdivisions with at most max_division division vertices, one per
/// isomorphism class. Division vertices sit between x and the middle vertex,
/// numbered from n + 2; members are ordered by total divisions. Throws Error(kTooLargeInstance) if a member would
/// exceed `max_vertices`.
std::vector<Graph> k2n_subdivisions(int n, int max_division, int max_vertices = 10);
/// K_{2,4t} suite.
std::vector<Graph> k2n_subdivision_suite(int t, int max_division);

Json to_json(const Witness& w);
/// {"name", "witnesses": {...}, "graphs": {...}, "values": {...}, "notes": [...]}
Json witnesses_json(const LabeledConstruction& c);

}  // namespace chordal
