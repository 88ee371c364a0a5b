#include "chordal/planarisation.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chordal/error.hpp"

namespace chordal {
namespace {

std::vector<Point> polygon_of(const FaceWalk& w, const std::map<VertexId, Point>& coords) {
  std::vector<Point> poly;
  for (const Dart& d : w.darts) poly.push_back(coords.at(d.from));
  return poly;
}

}  // namespace

std::vector<VertexId> FaceWalk::vertices() const {
  if (darts.empty()) return {isolated};
  std::vector<VertexId> out;
  for (const Dart& d : darts) out.push_back(d.from);
  return out;
}

std::vector<VertexId> Face::vertices() const {
  std::vector<VertexId> out;
  for (const FaceWalk& w : walks) {
    auto vs = w.vertices();
    out.insert(out.end(), vs.begin(), vs.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> Planarisation::ccw_neighbours(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : rotation.at(v)) out.push_back(plane_graph.edge(e).other(v));
  return out;
}

namespace {

Planarisation embed(const Graph& g, const std::map<VertexId, Point>& coords);

}  // namespace

Planarisation embed_plane(const Graph& g, const std::map<VertexId, Point>& coords) {
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Point& a = coords.at(edges[i].u);
      const Point& b = coords.at(edges[i].v);
      const Point& c = coords.at(edges[j].u);
      const Point& d = coords.at(edges[j].v);
      if (proper_intersection(a, b, c, d) || collinear_overlap(a, b, c, d)) {
        throw Error(ErrorKind::kDegenerateGeometry, "edges cross in a plane embedding");
      }
    }
  }
  return embed(g, coords);
}

namespace {

// Rotation system and faces; the caller guarantees a crossing-free drawing.
Planarisation embed(const Graph& g, const std::map<VertexId, Point>& coords) {
  Planarisation p;
  p.plane_graph = g;
  p.original_max_id = g.max_vertex_id();
  for (VertexId v : g.vertices()) p.coords[v] = coords.at(v);
  p.edge_origin.resize(static_cast<std::size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) p.edge_origin[static_cast<std::size_t>(e)] = e;

  // rotation: incident edges sorted counterclockwise by direction
  std::map<std::pair<VertexId, EdgeId>, std::size_t> slot;
  for (VertexId v : g.vertices()) {
    std::vector<EdgeId> inc = g.incident_edges(v);
    const Point& pv = coords.at(v);
    std::sort(inc.begin(), inc.end(), [&](EdgeId a, EdgeId b) {
      return angle_less(coords.at(g.edge(a).other(v)) - pv, coords.at(g.edge(b).other(v)) - pv);
    });
    for (std::size_t k = 0; k < inc.size(); ++k) slot[{v, inc[k]}] = k;
    p.rotation[v] = std::move(inc);
  }

  auto dart_of = [&](int index) {
    const Edge& e = g.edge(index / 2);
    return index % 2 == 0 ? Dart{e.u, e.v, index / 2} : Dart{e.v, e.u, index / 2};
  };
  auto index_of = [](const Dart& d) { return 2 * d.edge + (d.from < d.to ? 0 : 1); };
  // the face stays on the left: turn to the clockwise neighbour at the head
  auto next = [&](const Dart& d) {
    const auto& rot = p.rotation.at(d.to);
    std::size_t k = slot.at({d.to, d.edge});
    EdgeId e = rot[(k + rot.size() - 1) % rot.size()];
    return Dart{d.to, g.edge(e).other(d.to), e};
  };

  std::vector<FaceWalk> walks;
  std::vector<char> used(static_cast<std::size_t>(2 * g.num_edges()), 0);
  for (int i = 0; i < 2 * g.num_edges(); ++i) {
    if (used[static_cast<std::size_t>(i)]) continue;
    FaceWalk w;
    Dart d = dart_of(i);
    while (!used[static_cast<std::size_t>(index_of(d))]) {
      used[static_cast<std::size_t>(index_of(d))] = 1;
      w.darts.push_back(d);
      d = next(d);
    }
    walks.push_back(std::move(w));
  }

  auto components = g.components();
  std::map<VertexId, int> comp_of;
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (VertexId v : components[c]) comp_of[v] = static_cast<int>(c);
  }
  std::vector<int> outer_walk(components.size(), -1);
  std::vector<std::size_t> bounded;
  std::vector<Rational> area(walks.size());
  for (std::size_t w = 0; w < walks.size(); ++w) {
    area[w] = twice_signed_area(polygon_of(walks[w], coords));
    int c = comp_of.at(walks[w].darts.front().from);
    if (area[w] > 0) {
      bounded.push_back(w);
    } else {
      if (outer_walk[static_cast<std::size_t>(c)] >= 0) {
        throw Error(ErrorKind::kInternalContractViolation, "component with two outer walks");
      }
      outer_walk[static_cast<std::size_t>(c)] = static_cast<int>(w);
    }
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (outer_walk[c] >= 0) continue;
    if (components[c].size() != 1) throw Error(ErrorKind::kInternalContractViolation, "component without outer walk");
    FaceWalk lone;
    lone.isolated = components[c].front();
    outer_walk[c] = static_cast<int>(walks.size());
    walks.push_back(std::move(lone));
    area.emplace_back(0);
  }

  // face 0 is the outer face, then one face per bounded walk
  std::map<std::size_t, int> face_of_bounded;
  p.faces.assign(1 + bounded.size(), Face{});
  for (std::size_t k = 0; k < bounded.size(); ++k) {
    face_of_bounded[bounded[k]] = static_cast<int>(k) + 1;
    p.faces[k + 1].walks.push_back(walks[bounded[k]]);
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    const Point& probe = coords.at(components[c].front());
    int host = 0;
    Rational host_area = 0;
    for (std::size_t b : bounded) {
      if (comp_of.at(walks[b].darts.front().from) == static_cast<int>(c)) continue;
      if (!strictly_inside(probe, polygon_of(walks[b], coords))) continue;
      if (host == 0 || area[b] < host_area) {
        host = face_of_bounded.at(b);
        host_area = area[b];
      }
    }
    p.faces[static_cast<std::size_t>(host)].walks.push_back(walks[static_cast<std::size_t>(outer_walk[c])]);
  }
  p.outer_face = 0;
  return p;
}

}  // namespace

Planarisation planarise(const StraightLineDrawing& d) {
  if (d.linear()) throw Error(ErrorKind::kInvalidParameter, "planarise a linear drawing after wrap_linear");
  const Graph& g = d.graph();
  CrossingGraph x = crossing_graph(d);
  VertexId next_id = g.max_vertex_id() + 1;
  std::map<VertexId, std::pair<EdgeId, EdgeId>> origin;
  std::map<VertexId, Point> coords = d.coords();
  std::vector<std::vector<std::pair<Rational, VertexId>>> along(static_cast<std::size_t>(g.num_edges()));
  for (const auto& [pair, point] : x.crossing_points) {
    VertexId dummy = next_id++;
    origin[dummy] = {pair.u, pair.v};
    coords[dummy] = point;
    for (EdgeId e : {pair.u, pair.v}) {
      const Edge& ed = g.edge(e);
      along[static_cast<std::size_t>(e)].emplace_back(segment_parameter(point, d.position(ed.u), d.position(ed.v)),
                                                      dummy);
    }
  }
  GraphBuilder b;
  for (VertexId v : g.vertices()) b.add_vertex(v);
  for (const auto& [v, l] : g.labels()) b.set_label(v, l);
  std::map<Edge, EdgeId> piece_origin;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto& list = along[static_cast<std::size_t>(e)];
    std::sort(list.begin(), list.end());
    VertexId prev = g.edge(e).u;
    for (const auto& [_, dummy] : list) {
      b.add_edge(prev, dummy);
      piece_origin[Edge(prev, dummy)] = e;
      prev = dummy;
    }
    b.add_edge(prev, g.edge(e).v);
    piece_origin[Edge(prev, g.edge(e).v)] = e;
  }
  Graph plane = b.build();
  Planarisation p = embed(plane, coords);
  p.dummy_origin = std::move(origin);
  p.original_max_id = g.max_vertex_id();
  for (EdgeId e = 0; e < plane.num_edges(); ++e) {
    p.edge_origin[static_cast<std::size_t>(e)] = piece_origin.at(plane.edge(e));
  }
  return p;
}

Planarisation planarise(const CircularDrawing& d) {
  crossing_graph(d);  // rejects triple points
  return planarise(as_straight_line(d));
}

MapGraph map_graph(const Planarisation& p) {
  std::map<VertexId, std::vector<int>> faces_at;
  for (std::size_t f = 0; f < p.faces.size(); ++f) {
    for (VertexId v : p.faces[f].vertices()) faces_at[v].push_back(static_cast<int>(f));
  }
  std::set<Edge> adj;
  for (const auto& [_, fs] : faces_at) {
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i + 1; j < fs.size(); ++j)
        if (fs[i] != fs[j]) adj.emplace(fs[i], fs[j]);
  }
  MapGraph m;
  m.graph = Graph::on_range(static_cast<int>(p.faces.size()), std::vector<Edge>(adj.begin(), adj.end()));
  m.outer_face = p.outer_face;
  return m;
}

bool euler_holds(const Planarisation& p) {
  const Graph& g = p.plane_graph;
  auto components = g.components();
  std::map<VertexId, std::size_t> comp_of;
  for (std::size_t c = 0; c < components.size(); ++c)
    for (VertexId v : components[c]) comp_of[v] = c;
  std::vector<long> v_count(components.size(), 0);
  std::vector<long> e_count(components.size(), 0);
  std::vector<long> w_count(components.size(), 0);
  for (std::size_t c = 0; c < components.size(); ++c) v_count[c] = static_cast<long>(components[c].size());
  for (const Edge& e : g.edges()) ++e_count[comp_of.at(e.u)];
  for (const Face& f : p.faces) {
    for (const FaceWalk& w : f.walks) ++w_count[comp_of.at(w.vertices().front())];
  }
  for (std::size_t c = 0; c < components.size(); ++c) {
    if (v_count[c] - e_count[c] + w_count[c] != 2) return false;
  }
  return true;
}

}  // namespace chordal
