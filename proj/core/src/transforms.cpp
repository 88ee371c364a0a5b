#include "chordal/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chordal/algorithms.hpp"
#include "chordal/error.hpp"
#include "chordal/hadwiger.hpp"
#include "chordal/topological.hpp"
#include "chordal/treewidth.hpp"

namespace chordal {

Graph original_graph(const Planarisation& p) {
  const Graph& plane = p.plane_graph;
  std::map<EdgeId, std::vector<VertexId>> ends;
  for (EdgeId e = 0; e < plane.num_edges(); ++e) {
    EdgeId o = p.edge_origin.at(static_cast<std::size_t>(e));
    for (VertexId v : {plane.edge(e).u, plane.edge(e).v}) {
      if (!p.is_dummy(v)) ends[o].push_back(v);
    }
  }
  GraphBuilder b;
  for (VertexId v : plane.vertices()) {
    if (!p.is_dummy(v)) b.add_vertex(v);
  }
  for (const auto& [v, l] : plane.labels()) {
    if (!p.is_dummy(v)) b.set_label(v, l);
  }
  for (const auto& [o, vs] : ends) {
    if (vs.size() != 2) {
      throw Error(ErrorKind::kInvalidParameter, "original edge " + std::to_string(o) + " is not a path between two vertices");
    }
    b.add_edge(vs[0], vs[1]);
  }
  return b.build();
}

Graph crossing_graph_of(const Planarisation& p) {
  std::vector<Edge> es;
  for (const auto& [_, pair] : p.dummy_origin) es.emplace_back(pair.first, pair.second);
  return Graph::on_range(original_graph(p).num_edges(), std::move(es));
}

Orientation default_orientation(const Planarisation& p) {
  Graph g = original_graph(p);
  Orientation o;
  for (EdgeId e = 0; e < g.num_edges(); ++e) o[e] = {g.edge(e).u, g.edge(e).v};
  return o;
}

namespace {

void require_valid(const TreeDecomposition& td, const Planarisation& p) {
  try {
    validate_decomposition(p.plane_graph, td);
  } catch (const Error& e) {
    throw Error(ErrorKind::kInvalidInputDecomposition, e.what());
  }
}

void normalise(std::vector<VertexId>& bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
}

}  // namespace

TreeDecomposition td_lift_to_graph(const TreeDecomposition& td, const Planarisation& p,
                                   const Orientation& orientation) {
  require_valid(td, p);
  Graph g = original_graph(p);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto it = orientation.find(e);
    if (it == orientation.end()) {
      throw Error(ErrorKind::kInvalidParameter, "edge " + std::to_string(e) + " is not oriented");
    }
    if (Edge(it->second.first, it->second.second) != g.edge(e)) {
      throw Error(ErrorKind::kInvalidParameter, "orientation of edge " + std::to_string(e) + " names other endpoints");
    }
  }
  TreeDecomposition out;
  out.tree = td.tree;
  for (const auto& [node, bag] : td.bags) {
    std::vector<VertexId> lifted;
    for (VertexId v : bag) {
      auto d = p.dummy_origin.find(v);
      if (d == p.dummy_origin.end()) {
        lifted.push_back(v);
      } else {
        lifted.push_back(orientation.at(d->second.first).second);
        lifted.push_back(orientation.at(d->second.second).second);
      }
    }
    normalise(lifted);
    out.bags[node] = std::move(lifted);
  }
  return out;
}

TreeDecomposition td_lift_to_graph(const TreeDecomposition& td, const Planarisation& p) {
  return td_lift_to_graph(td, p, default_orientation(p));
}

TreeDecomposition td_lift_to_crossing(const TreeDecomposition& td, const Planarisation& p) {
  require_valid(td, p);
  Graph x = crossing_graph_of(p);
  TreeDecomposition out;
  std::set<VertexId> covered;
  for (const auto& [node, bag] : td.bags) {
    std::vector<VertexId> lifted;
    for (VertexId v : bag) {
      auto d = p.dummy_origin.find(v);
      if (d == p.dummy_origin.end()) continue;
      lifted.push_back(d->second.first);
      lifted.push_back(d->second.second);
    }
    normalise(lifted);
    covered.insert(lifted.begin(), lifted.end());
    out.bags[node] = std::move(lifted);
  }
  GraphBuilder tree;
  for (VertexId n : td.tree.vertices()) tree.add_vertex(n);
  for (const Edge& e : td.tree.edges()) tree.add_edge(e.u, e.v);
  int next = td.tree.empty() ? 0 : td.tree.max_vertex_id() + 1;
  for (VertexId e : x.vertices()) {
    if (covered.count(e)) continue;
    if (td.tree.empty() && next > 0) {
      tree.add_edge(next - 1, next);
    } else if (!td.tree.empty()) {
      tree.add_edge(td.tree.vertices().front(), next);
    }
    tree.add_vertex(next);
    out.bags[next] = {e};
    ++next;
  }
  out.tree = tree.build();
  return out;
}

namespace {

using Rotation = std::map<VertexId, std::vector<VertexId>>;
using HalfEdge = std::pair<VertexId, VertexId>;

std::size_t position(const std::vector<VertexId>& list, VertexId w) {
  auto it = std::find(list.begin(), list.end(), w);
  if (it == list.end()) throw Error(ErrorKind::kInternalContractViolation, "rotation misses a neighbour");
  return static_cast<std::size_t>(it - list.begin());
}

// Same convention as the geometric embedding: keep the face on the left by
// turning to the clockwise neighbour at the head.
HalfEdge next_dart(const Rotation& rot, const HalfEdge& d) {
  const auto& list = rot.at(d.second);
  std::size_t k = position(list, d.first);
  return {d.second, list[(k + list.size() - 1) % list.size()]};
}

std::vector<HalfEdge> trace(const Rotation& rot, const HalfEdge& start) {
  std::vector<HalfEdge> walk;
  HalfEdge d = start;
  do {
    walk.push_back(d);
    d = next_dart(rot, d);
  } while (d != start);
  return walk;
}

std::vector<std::vector<HalfEdge>> all_faces(const Rotation& rot) {
  std::set<HalfEdge> seen;
  std::vector<std::vector<HalfEdge>> faces;
  for (const auto& [v, list] : rot) {
    for (VertexId w : list) {
      if (seen.count({v, w})) continue;
      faces.push_back(trace(rot, {v, w}));
      seen.insert(faces.back().begin(), faces.back().end());
    }
  }
  return faces;
}

// Adds edge a-b through the corner of a left by dart a->a_out and the corner
// of b left by b->b_out (both corners of one face).
void add_chord(Rotation& rot, std::set<Edge>& edges, VertexId a, VertexId a_out, VertexId b, VertexId b_out) {
  auto& la = rot.at(a);
  la.insert(la.begin() + static_cast<long>(position(la, a_out)) + 1, b);
  auto& lb = rot.at(b);
  lb.insert(lb.begin() + static_cast<long>(position(lb, b_out)) + 1, a);
  edges.emplace(a, b);
}

Rotation rotation_of(const Planarisation& p) {
  Rotation rot;
  for (VertexId v : p.plane_graph.vertices()) rot[v] = p.ccw_neighbours(v);
  return rot;
}

int dart_index(const Graph& g, const HalfEdge& d) {
  return 2 * *g.edge_id(d.first, d.second) + (d.first < d.second ? 0 : 1);
}

FaceLabeling label_faces(const Planarisation& p, const MapGraph& m) {
  FaceLabeling lab;
  int best_ecc = -1;
  for (VertexId f : m.graph.vertices()) {
    int ecc = eccentricity(m.graph, f);
    if (best_ecc < 0 || ecc < best_ecc) {
      best_ecc = ecc;
      lab.root_face = f;
    }
  }
  for (const auto& [f, dist] : bfs_distances(m.graph, lab.root_face)) lab.dist0[f] = dist;
  std::vector<VertexId> root_vertices = p.faces.at(static_cast<std::size_t>(lab.root_face)).vertices();
  lab.root_vertex = *std::min_element(root_vertices.begin(), root_vertices.end());
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    int d = lab.dist0.at(static_cast<int>(f));
    for (VertexId v : p.faces[f].vertices()) {
      auto it = lab.rho.find(v);
      if (it == lab.rho.end() || d < it->second) lab.rho[v] = d;
    }
  }
  lab.rho[lab.root_vertex] = -1;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    VertexId best = -1;
    for (VertexId v : p.faces[f].vertices()) {
      if (best < 0 || std::pair(lab.rho.at(v), v) < std::pair(lab.rho.at(best), best)) best = v;
    }
    lab.face_vertex[static_cast<int>(f)] = best;
  }
  return lab;
}

}  // namespace

Triangulation triangulate_via_map(const Planarisation& p) {
  const Graph& g = p.plane_graph;
  if (g.num_vertices() < 3) throw Error(ErrorKind::kTooSmall, "triangulation needs at least 3 vertices");
  if (!g.is_connected()) throw Error(ErrorKind::kDisconnectedGraph, "triangulation needs a connected plane graph");
  MapGraph m = map_graph(p);
  Triangulation t;
  t.labeling = label_faces(p, m);
  const auto& rho = t.labeling.rho;

  Rotation rot = rotation_of(p);
  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  auto adjacent = [&](VertexId a, VertexId b) { return edges.count(Edge(a, b)) > 0; };

  // join v_F to every vertex of F, keeping hold of one dart into v_F so the
  // part of F still to be processed can be retraced after each new edge
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    VertexId vf = t.labeling.face_vertex.at(static_cast<int>(f));
    const auto& darts = p.faces[f].walks.front().darts;
    auto in = std::find_if(darts.begin(), darts.end(), [&](const Dart& d) { return d.to == vf; });
    HalfEdge into{in->from, in->to};
    for (;;) {
      std::vector<HalfEdge> walk = trace(rot, next_dart(rot, into));
      bool added = false;
      for (std::size_t i = 2; i + 1 < walk.size(); ++i) {
        VertexId x = walk[i].first;
        if (x == vf || adjacent(vf, x)) continue;
        add_chord(rot, edges, vf, walk[0].second, x, walk[i].second);
        added = true;
        break;
      }
      if (!added) break;
    }
  }

  // chords inside the remaining long faces, smallest-rho corner first
  for (;;) {
    std::vector<HalfEdge> walk;
    for (auto& face : all_faces(rot)) {
      if (face.size() > 3) {
        walk = std::move(face);
        break;
      }
    }
    if (walk.empty()) break;
    std::size_t k = walk.size();
    std::vector<std::size_t> corners(k);
    for (std::size_t i = 0; i < k; ++i) corners[i] = i;
    std::stable_sort(corners.begin(), corners.end(), [&](std::size_t a, std::size_t b) {
      VertexId x = walk[a].first;
      VertexId y = walk[b].first;
      return std::pair(rho.at(x), x) < std::pair(rho.at(y), y);
    });
    bool added = false;
    for (std::size_t i : corners) {
      VertexId a = walk[i].first;
      for (std::size_t off = 2; off + 1 < k && !added; ++off) {
        std::size_t j = (i + off) % k;
        VertexId b = walk[j].first;
        if (a == b || adjacent(a, b)) continue;
        add_chord(rot, edges, a, walk[i].second, b, walk[j].second);
        added = true;
      }
      if (added) break;
    }
    if (!added) throw Error(ErrorKind::kInternalContractViolation, "face without a chord to add");
  }

  Planarisation& h = t.h;
  GraphBuilder b;
  for (VertexId v : g.vertices()) b.add_vertex(v);
  for (const auto& [v, l] : g.labels()) b.set_label(v, l);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  h.plane_graph = b.build();
  const Graph& hg = h.plane_graph;
  for (const auto& [v, list] : rot) {
    std::vector<EdgeId> ids;
    for (VertexId w : list) ids.push_back(*hg.edge_id(v, w));
    h.rotation[v] = std::move(ids);
  }
  h.dummy_origin = p.dummy_origin;
  h.coords = p.coords;
  h.original_max_id = p.original_max_id;
  h.edge_origin.assign(static_cast<std::size_t>(hg.num_edges()), -1);
  for (EdgeId e = 0; e < hg.num_edges(); ++e) {
    if (auto old = g.edge_id(hg.edge(e).u, hg.edge(e).v)) {
      h.edge_origin[static_cast<std::size_t>(e)] = p.edge_origin.at(static_cast<std::size_t>(*old));
    }
  }
  const Dart& outer_first = p.faces.at(static_cast<std::size_t>(p.outer_face)).walks.front().darts.front();
  HalfEdge outer_dart{outer_first.from, outer_first.to};
  std::vector<std::pair<int, std::vector<HalfEdge>>> keyed;
  for (auto& face : all_faces(rot)) {
    bool outer = std::find(face.begin(), face.end(), outer_dart) != face.end();
    int key = outer ? -1 : dart_index(hg, face.front());
    for (const HalfEdge& d : face) key = outer ? -1 : std::min(key, dart_index(hg, d));
    keyed.emplace_back(key, std::move(face));
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [_, face] : keyed) {
    FaceWalk w;
    for (const HalfEdge& d : face) w.darts.push_back(Dart{d.first, d.second, *hg.edge_id(d.first, d.second)});
    h.faces.push_back(Face{{std::move(w)}});
  }
  h.outer_face = 0;
  t.radius_h = graph_radius(hg);
  t.radius_map = graph_radius(m.graph);

  Report check = validate_triangulation(p, t);
  if (const Check* bad = check.first_failure()) {
    throw Error(ErrorKind::kInternalContractViolation, "triangulation check failed: " + bad->name);
  }
  return t;
}

Report validate_triangulation(const Planarisation& p, const Triangulation& t) {
  Report r;
  const Graph& g = p.plane_graph;
  const Graph& hg = t.h.plane_graph;
  r.add_true("same-vertex-set", std::equal(g.vertices().begin(), g.vertices().end(), hg.vertices().begin(),
                                           hg.vertices().end()));
  bool super = true;
  for (const Edge& e : g.edges()) super = super && hg.adjacent(e.u, e.v);
  r.add_true("supergraph", super);

  Rotation rot;
  bool rotation_ok = true;
  for (VertexId v : hg.vertices()) {
    auto it = t.h.rotation.find(v);
    std::vector<VertexId> list;
    if (it != t.h.rotation.end()) {
      for (EdgeId e : it->second) list.push_back(hg.edge(e).other(v));
    }
    std::vector<VertexId> sorted = list;
    std::sort(sorted.begin(), sorted.end());
    auto nb = hg.neighbours(v);
    rotation_ok = rotation_ok && std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end());
    rot[v] = std::move(list);
  }
  r.add_true("rotation-matches-graph", rotation_ok);
  if (!rotation_ok) return r;
  auto faces = all_faces(rot);
  r.add_eq("euler V-E+F", hg.num_vertices() - hg.num_edges() + static_cast<long>(faces.size()), 2);
  r.add_eq("traced-faces", static_cast<long>(faces.size()), static_cast<long>(t.h.faces.size()));
  long long_faces = 0;
  for (const auto& f : faces) long_faces += f.size() != 3 ? 1 : 0;
  r.add_eq("non-triangular-faces", long_faces, 0);

  const FaceLabeling& lab = t.labeling;
  r.add_eq("rho(root_vertex)", lab.rho.count(lab.root_vertex) ? lab.rho.at(lab.root_vertex) : 0, -1);
  long descent_failures = 0;
  std::string first;
  for (VertexId v : hg.vertices()) {
    if (v == lab.root_vertex) continue;
    bool lower = false;
    for (VertexId u : hg.neighbours(v)) lower = lower || lab.rho.at(u) < lab.rho.at(v);
    if (!lower) {
      if (descent_failures++ == 0) first = "vertex " + std::to_string(v);
    }
  }
  r.add_eq("rho-descent-failures", descent_failures, 0).detail = first;
  int rad_map = graph_radius(map_graph(p).graph);
  r.add_le("rad(H) <= rad(M_G)+1", graph_radius(hg), rad_map + 1);
  return r;
}

namespace {

WidthBounds bounds(const Graph& g, const Graph& x, const Planarisation& p, bool circular, const BoundsOptions& options) {
  WidthBounds out;
  Report& r = out.report;
  const Caps& caps = options.caps;
  auto exact_allowed = [&](const Graph& h, const char* what) {
    if (h.num_vertices() <= caps.treewidth) return true;
    if (!options.force) {
      throw Error(ErrorKind::kTooLargeInstance, std::string(what) + " has " + std::to_string(h.num_vertices()) +
                                                    " vertices, treewidth cap is " + std::to_string(caps.treewidth));
    }
    return false;
  };
  bool g_exact = exact_allowed(g, "G");
  bool x_exact = exact_allowed(x, "X_D");

  MapGraph m = map_graph(p);
  out.rad_m = graph_radius(m.graph);
  const long map_bound = 6L * out.rad_m + 7;
  TreewidthResult tp = treewidth_auto(p.plane_graph, caps.treewidth);
  out.tw_p = tp.width;
  const long lift_bound = 2L * out.tw_p + 1;

  if (g_exact) {
    out.tw_g = treewidth_auto(g, caps.treewidth).width;
    r.add_le("tw(G) <= 6rad(M_D)+7", out.tw_g, map_bound);
  } else {
    r.add_skipped("tw(G) <= 6rad(M_D)+7", "G above treewidth cap");
  }
  if (x_exact) {
    out.tw_x = treewidth_auto(x, caps.treewidth).width;
    r.add_le("tw(X_D) <= 6rad(M_D)+7", out.tw_x, map_bound);
  } else {
    r.add_skipped("tw(X_D) <= 6rad(M_D)+7", "X_D above treewidth cap");
  }
  r.add_le("tw(P_D) <= 3rad(M_D)+3", out.tw_p, 3L * out.rad_m + 3);

  TreeDecomposition to_g = td_lift_to_graph(tp.decomposition, p);
  r.add_true("lift-to-G-valid", is_valid_decomposition(g, to_g));
  r.add_le("width(lift-to-G) <= 2tw(P_D)+1", to_g.width(), lift_bound);
  if (g_exact) r.add_le("tw(G) <= 2tw(P_D)+1", out.tw_g, lift_bound);
  TreeDecomposition to_x = td_lift_to_crossing(tp.decomposition, p);
  r.add_true("lift-to-X_D-valid", is_valid_decomposition(x, to_x));
  r.add_le("width(lift-to-X_D) <= 2tw(P_D)+1", to_x.width(), lift_bound);
  if (x_exact) r.add_le("tw(X_D) <= 2tw(P_D)+1", out.tw_x, lift_bound);

  if (p.plane_graph.num_vertices() >= 3 && p.plane_graph.is_connected()) {
    Triangulation t = triangulate_via_map(p);
    out.rad_h = t.radius_h;
    for (Check& c : validate_triangulation(p, t).checks) r.checks.push_back(std::move(c));
    r.add_le("tw(P_D) <= 3rad(H)", out.tw_p, 3L * out.rad_h);
  } else {
    r.add_skipped("triangulation", "P_D is disconnected or has fewer than 3 vertices");
  }

  if (options.minor_chain && !circular) {
    r.add_skipped("minor chains", "circular drawings only");
  } else if (options.minor_chain) {
    const char* middle = "6rad(M_D)+7 <= 12h(X_D)-11";
    const char* last = "12h(X_D)-11 <= 12tw(X_D)+1";
    if (x.num_vertices() <= caps.hadwiger) {
      int h = hadwiger_exact(x, caps.hadwiger).value;
      out.hadwiger_x = h;
      if (h >= 2) {
        r.add_le(middle, map_bound, 12L * h - 11);
      } else {
        r.add_skipped(middle, "needs h(X_D) >= 2");
      }
      if (x_exact) r.add_le(last, 12L * h - 11, 12L * out.tw_x + 1);
    } else {
      r.add_skipped(middle, "X_D above hadwiger cap");
      r.add_skipped(last, "X_D above hadwiger cap");
    }
    const char* hajos = "rad(M_D) <= h_top(X_D)^2+3h_top(X_D)+1";
    if (x.num_vertices() <= caps.hajos) {
      int ht = hajos_exact(x, caps.hajos).value;
      out.hajos_x = ht;
      r.add_le(hajos, out.rad_m, static_cast<long>(ht) * ht + 3L * ht + 1);
    } else {
      r.add_skipped(hajos, "X_D above hajos cap");
    }
  }
  return out;
}

}  // namespace

WidthBounds check_width_bounds(const CircularDrawing& d, const BoundsOptions& options) {
  return bounds(d.graph(), crossing_graph(d).graph, planarise(d), true, options);
}

WidthBounds check_width_bounds(const StraightLineDrawing& d, const BoundsOptions& options) {
  if (d.linear()) return check_width_bounds(wrap_linear(d), options);
  return bounds(d.graph(), crossing_graph(d).graph, planarise(d), false, options);
}

Json to_json(const WidthBounds& b) {
  Json j{{"tw_g", b.tw_g}, {"tw_x", b.tw_x}, {"tw_p", b.tw_p}, {"rad_m", b.rad_m}, {"rad_h", b.rad_h}};
  j["hadwiger_x"] = b.hadwiger_x ? Json(*b.hadwiger_x) : Json(nullptr);
  j["hajos_x"] = b.hajos_x ? Json(*b.hajos_x) : Json(nullptr);
  j["checks"] = to_json(b.report);
  return j;
}

}  // namespace chordal
