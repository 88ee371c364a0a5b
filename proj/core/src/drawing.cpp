#include "chordal/drawing.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chordal/error.hpp"

namespace chordal {
namespace {

bool interleaved(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  bool c_in = a < c && c < b;
  bool d_in = a < d && d < b;
  return c_in != d_in;
}

// Crossing points shared by three or more chords, with the chords meeting there.
std::map<Point, std::set<EdgeId>> crossing_groups(const Graph& g, const std::map<VertexId, Point>& pos) {
  std::map<Point, std::set<EdgeId>> groups;
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& e = edges[i];
      const Edge& f = edges[j];
      if (e.has(f.u) || e.has(f.v)) continue;
      auto p = proper_intersection(pos.at(e.u), pos.at(e.v), pos.at(f.u), pos.at(f.v));
      if (!p) continue;
      auto& group = groups[*p];
      group.insert(static_cast<EdgeId>(i));
      group.insert(static_cast<EdgeId>(j));
    }
  }
  return groups;
}

std::optional<std::pair<Point, std::set<EdgeId>>> first_triple_point(const CircularDrawing& d) {
  std::map<VertexId, Point> pos;
  for (VertexId v : d.graph().vertices()) pos[v] = d.position(v);
  for (auto& [p, group] : crossing_groups(d.graph(), pos)) {
    if (group.size() >= 3) return std::make_pair(p, group);
  }
  return std::nullopt;
}

}  // namespace

CircularDrawing::CircularDrawing(Graph graph, std::vector<VertexId> order, std::map<VertexId, Rational> anchors)
    : graph_(std::move(graph)), order_(std::move(order)), anchors_(std::move(anchors)) {
  std::vector<VertexId> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  if (!std::equal(sorted.begin(), sorted.end(), graph_.vertices().begin(), graph_.vertices().end())) {
    throw Error(ErrorKind::kNotAPermutation, "order is not a permutation of the vertex set");
  }
  if (anchors_.size() != order_.size()) {
    throw Error(ErrorKind::kDegenerateGeometry, "anchors must be given for exactly the vertices");
  }
  for (std::size_t i = 0; i < order_.size(); ++i) {
    auto it = anchors_.find(order_[i]);
    if (it == anchors_.end()) {
      throw Error(ErrorKind::kDegenerateGeometry, "missing anchor for vertex " + std::to_string(order_[i]));
    }
    it->second.canonicalize();
    if (i > 0 && !(anchors_.at(order_[i - 1]) < it->second)) {
      throw Error(ErrorKind::kDegenerateGeometry, "anchors not increasing at vertex " + std::to_string(order_[i]));
    }
    slot_[order_[i]] = static_cast<int>(i);
  }
}

bool CircularDrawing::chords_cross(EdgeId e, EdgeId f) const {
  const Edge& a = graph_.edge(e);
  const Edge& b = graph_.edge(f);
  if (a.has(b.u) || a.has(b.v)) return false;
  return interleaved(slot(a.u), slot(a.v), slot(b.u), slot(b.v));
}

CircularDrawing make_generic(CircularDrawing d) {
  auto concurrent_triples = [](const CircularDrawing& c) {
    std::map<VertexId, Point> pos;
    for (VertexId w : c.graph().vertices()) pos[w] = c.position(w);
    long n = 0;
    for (const auto& [_, group] : crossing_groups(c.graph(), pos)) {
      long k = static_cast<long>(group.size());
      n += k * (k - 1) * (k - 2) / 6;
    }
    return n;
  };
  long current = -1;
  // every accepted move lowers the triple count; the bound only guards against bugs
  for (int round = 0; round < 10000; ++round) {
    auto triple = first_triple_point(d);
    if (!triple) return d;
    if (current < 0) current = concurrent_triples(d);
    VertexId v = -1;
    for (EdgeId e : triple->second) v = std::max({v, d.graph().edge(e).u, d.graph().edge(e).v});
    int s = d.slot(v);
    const auto& order = d.order();
    Rational base = d.anchor(v);
    bool moved = false;
    Rational step(1, 2);
    for (int j = 1; j <= 256 && !moved; ++j, step /= 2) {
      Rational candidate = base + step;
      if (static_cast<std::size_t>(s) + 1 < order.size() && !(candidate < d.anchor(order[static_cast<std::size_t>(s) + 1]))) {
        continue;
      }
      auto anchors = d.anchors();
      anchors[v] = candidate;
      CircularDrawing trial(d.graph(), order, std::move(anchors));
      long after = concurrent_triples(trial);
      if (after < current) {
        d = std::move(trial);
        current = after;
        moved = true;
      }
    }
    if (!moved) throw Error(ErrorKind::kDegenerateGeometry, "could not separate a triple crossing point");
  }
  throw Error(ErrorKind::kDegenerateGeometry, "genericity repair did not converge");
}

CircularDrawing make_circular(const Graph& g, const std::vector<VertexId>& order) {
  std::map<VertexId, Rational> anchors;
  for (std::size_t i = 0; i < order.size(); ++i) anchors[order[i]] = Rational(static_cast<long>(i) + 1);
  if (anchors.size() != order.size()) throw Error(ErrorKind::kNotAPermutation, "repeated vertex in order");
  return make_generic(CircularDrawing(g, order, std::move(anchors)));
}

StraightLineDrawing::StraightLineDrawing(Graph graph, std::map<VertexId, Point> coords, bool linear)
    : graph_(std::move(graph)), coords_(std::move(coords)), linear_(linear) {
  for (VertexId v : graph_.vertices()) {
    if (!coords_.count(v)) throw Error(ErrorKind::kDegenerateGeometry, "no coordinates for vertex " + std::to_string(v));
  }
  if (coords_.size() != static_cast<std::size_t>(graph_.num_vertices())) {
    throw Error(ErrorKind::kDanglingId, "coordinates for a vertex outside the graph");
  }
  for (auto& [v, p] : coords_) {
    p.x.canonicalize();
    p.y.canonicalize();
  }
  if (linear_) {
    std::set<Rational> xs;
    for (const auto& [v, p] : coords_) {
      if (p.y != 0) throw Error(ErrorKind::kDegenerateGeometry, "linear drawing with vertex off the axis");
      if (!xs.insert(p.x).second) throw Error(ErrorKind::kDuplicateCoordinate, "repeated x at vertex " + std::to_string(v));
    }
    return;
  }
  std::set<Point> seen;
  for (const auto& [v, p] : coords_) {
    if (!seen.insert(p).second) throw Error(ErrorKind::kDuplicateCoordinate, "repeated position at vertex " + std::to_string(v));
  }
  for (const Edge& e : graph_.edges()) {
    for (const auto& [v, p] : coords_) {
      if (!e.has(v) && in_open_segment(p, coords_.at(e.u), coords_.at(e.v))) {
        throw Error(ErrorKind::kDegenerateGeometry, "vertex " + std::to_string(v) + " lies inside edge " +
                                                        std::to_string(e.u) + "-" + std::to_string(e.v));
      }
    }
  }
  auto edges = graph_.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (collinear_overlap(coords_.at(edges[i].u), coords_.at(edges[i].v), coords_.at(edges[j].u),
                            coords_.at(edges[j].v))) {
        throw Error(ErrorKind::kDegenerateGeometry, "overlapping edges");
      }
    }
  }
  for (const auto& [p, group] : crossing_groups(graph_, coords_)) {
    if (group.size() >= 3) throw Error(ErrorKind::kDegenerateGeometry, "three edges cross in one point");
  }
}

CrossingGraph crossing_graph(const CircularDrawing& d) {
  const Graph& g = d.graph();
  CrossingGraph out;
  std::vector<Edge> xe;
  std::map<VertexId, Point> pos;
  for (VertexId v : g.vertices()) pos[v] = d.position(v);
  std::map<Point, int> multiplicity;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
      if (!d.chords_cross(e, f)) continue;
      const Edge& a = g.edge(e);
      const Edge& b = g.edge(f);
      auto p = proper_intersection(pos.at(a.u), pos.at(a.v), pos.at(b.u), pos.at(b.v));
      if (!p) throw Error(ErrorKind::kInternalContractViolation, "interleaved chords without an intersection");
      if (++multiplicity[*p] > 1) {
        throw Error(ErrorKind::kDegenerateGeometry, "three chords cross in one point");
      }
      xe.emplace_back(e, f);
      out.crossing_points.emplace(Edge(e, f), *p);
    }
  }
  out.graph = Graph::on_range(g.num_edges(), std::move(xe));
  return out;
}

CrossingGraph crossing_graph(const StraightLineDrawing& d) {
  const Graph& g = d.graph();
  CrossingGraph out;
  std::vector<Edge> xe;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
      const Edge& a = g.edge(e);
      const Edge& b = g.edge(f);
      if (a.has(b.u) || a.has(b.v)) continue;
      if (d.linear()) {
        auto x = [&](VertexId v) { return d.position(v).x; };
        Rational lo = std::min(x(a.u), x(a.v));
        Rational hi = std::max(x(a.u), x(a.v));
        bool c_in = lo < x(b.u) && x(b.u) < hi;
        bool d_in = lo < x(b.v) && x(b.v) < hi;
        if (c_in != d_in) xe.emplace_back(e, f);
        continue;
      }
      auto p = proper_intersection(d.position(a.u), d.position(a.v), d.position(b.u), d.position(b.v));
      if (!p) continue;
      xe.emplace_back(e, f);
      out.crossing_points.emplace(Edge(e, f), *p);
    }
  }
  out.graph = Graph::on_range(g.num_edges(), std::move(xe));
  return out;
}

Graph crossing_graph_of_order(const Graph& g, std::span<const VertexId> order) {
  std::vector<int> slot(static_cast<std::size_t>(g.max_vertex_id() + 1), -1);
  for (std::size_t i = 0; i < order.size(); ++i) slot[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  auto edges = g.edges();
  std::vector<Edge> xe;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.has(b.u) || a.has(b.v)) continue;
      auto s = [&](VertexId v) { return slot[static_cast<std::size_t>(v)]; };
      if (interleaved(s(a.u), s(a.v), s(b.u), s(b.v))) xe.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph::on_range(g.num_edges(), std::move(xe));
}

CircularDrawing wrap_linear(const StraightLineDrawing& d) {
  if (!d.linear()) throw Error(ErrorKind::kInvalidParameter, "wrap_linear needs a linear drawing");
  std::vector<std::pair<Rational, VertexId>> byx;
  for (const auto& [v, p] : d.coords()) byx.emplace_back(p.x, v);
  std::sort(byx.begin(), byx.end());
  for (std::size_t i = 1; i < byx.size(); ++i) {
    if (byx[i].first == byx[i - 1].first) throw Error(ErrorKind::kDuplicateCoordinate, "repeated x coordinate");
  }
  std::vector<VertexId> order;
  for (const auto& [_, v] : byx) order.push_back(v);
  return make_circular(d.graph(), order);
}

StraightLineDrawing as_straight_line(const CircularDrawing& d) {
  std::map<VertexId, Point> coords;
  for (VertexId v : d.graph().vertices()) coords[v] = d.position(v);
  return StraightLineDrawing(d.graph(), std::move(coords), false);
}

}  // namespace chordal
