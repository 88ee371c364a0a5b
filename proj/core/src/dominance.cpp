#include "chordal/dominance.hpp"

#include <algorithm>
#include <set>

#include "chordal/algorithms.hpp"
#include "chordal/error.hpp"

namespace chordal {
namespace {

bool same_direction(const Point& a, const Point& b) { return cross(a, b) == 0 && dot(a, b) > 0; }

Point rot90(const Point& u) { return Point{-u.y, u.x}; }

// Every endpoint direction plus one direction strictly inside each gap between
// consecutive distinct endpoint directions. Coverage counts of open intervals
// are constant on gaps, so these sample every attainable count.
std::vector<Point> sample_directions(std::span<const AngularInterval> intervals) {
  std::vector<Point> ends;
  for (const AngularInterval& iv : intervals) {
    ends.push_back(iv.start);
    ends.push_back(iv.end);
  }
  std::sort(ends.begin(), ends.end(), angle_less);
  ends.erase(std::unique(ends.begin(), ends.end(), same_direction), ends.end());
  std::vector<Point> out = ends;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    const Point& u = ends[i];
    const Point& w = ends[(i + 1) % ends.size()];
    if (ends.size() > 1 && cross(u, w) > 0) {
      out.push_back(u + w);
    } else {
      out.push_back(rot90(u));
    }
  }
  return out;
}

int depth_at(std::span<const AngularInterval> intervals, const Point& dir) {
  int n = 0;
  for (const AngularInterval& iv : intervals) n += iv.contains(dir) ? 1 : 0;
  return n;
}

bool on_vertex_line(const CircularDrawing& d, const Point& p) {
  auto vs = d.graph().vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Point a = d.position(vs[i]);
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (orientation(a, d.position(vs[j]), p) == 0) return true;
    }
  }
  return false;
}

std::vector<AngularInterval> intervals_of(const CircularDrawing& d, const Point& p,
                                          std::span<const EdgeId> edges) {
  std::vector<AngularInterval> out;
  out.reserve(edges.size());
  for (EdgeId e : edges) out.push_back(edge_interval(d, p, e));
  return out;
}

Json point_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

}  // namespace

bool AngularInterval::contains(const Point& direction) const {
  return cross(start, direction) > 0 && cross(direction, end) > 0;
}

bool AngularInterval::subset_of(const AngularInterval& other) const {
  auto in_closure = [&](const Point& x) { return cross(other.start, x) >= 0 && cross(x, other.end) >= 0; };
  return in_closure(start) && in_closure(end);
}

ReferencePoint reference_point(const Planarisation& p, const MapGraph& m) {
  if (p.faces.size() <= 1) throw Error(ErrorKind::kNoInteriorFace, "the drawing has a single face");
  auto dist = bfs_distances(m.graph, m.outer_face);
  int best = -1;
  int best_dist = -1;
  for (const auto& [face, dv] : dist) {
    if (face != m.outer_face && dv > best_dist) {
      best = face;
      best_dist = dv;
    }
  }
  if (best < 0) throw Error(ErrorKind::kNoInteriorFace, "no bounded face reachable in M_D");

  std::vector<VertexId> boundary = p.faces[static_cast<std::size_t>(best)].vertices();
  Point c{0, 0};
  for (VertexId v : boundary) c = c + p.coords.at(v);
  c = Rational(1, static_cast<long>(boundary.size())) * c;

  std::vector<Point> drawn;
  for (const auto& [v, pt] : p.coords) {
    if (v <= p.original_max_id) drawn.push_back(pt);
  }
  auto degenerate = [&](const Point& q) {
    for (std::size_t i = 0; i < drawn.size(); ++i) {
      for (std::size_t j = i + 1; j < drawn.size(); ++j) {
        if (orientation(drawn[i], drawn[j], q) == 0) return true;
      }
    }
    return false;
  };
  if (degenerate(c)) {
    // targets: boundary vertices, then midpoints of consecutive boundary
    // vertices; a target on a degenerate line through c never helps
    std::vector<Point> targets;
    for (VertexId v : boundary) targets.push_back(p.coords.at(v));
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      targets.push_back(Rational(1, 2) * (p.coords.at(boundary[i]) + p.coords.at(boundary[(i + 1) % boundary.size()])));
    }
    bool moved = false;
    for (std::size_t k = 0; k < targets.size() && !moved; ++k) {
      Rational step(1, 2);
      for (int j = 0; j < 64 && !moved; ++j, step /= 2) {
        Point q = c + step * (targets[k] - c);
        if (!degenerate(q)) {
          c = q;
          moved = true;
        }
      }
    }
    if (!moved) throw Error(ErrorKind::kDegenerateGeometry, "no generic point found in the deepest face");
  }
  c.x.canonicalize();
  c.y.canonicalize();
  return ReferencePoint{best, c};
}

ReferencePoint reference_point(const CircularDrawing& d) {
  Planarisation p = planarise(d);
  return reference_point(p, map_graph(p));
}

AngularInterval edge_interval(const CircularDrawing& d, const Point& p, EdgeId e) {
  if (e < 0 || e >= d.graph().num_edges()) {
    throw Error(ErrorKind::kDanglingId, "unknown edge " + std::to_string(e));
  }
  const Edge& ed = d.graph().edge(e);
  Point a = d.position(ed.u) - p;
  Point b = d.position(ed.v) - p;
  Rational c = cross(a, b);
  if (c == 0) {
    throw Error(ErrorKind::kPointOnChord,
                "reference point is on the line of edge " + std::to_string(ed.u) + "-" + std::to_string(ed.v));
  }
  return c > 0 ? AngularInterval{a, b} : AngularInterval{b, a};
}

bool is_dominant(std::span<const AngularInterval> intervals) {
  if (intervals.empty()) return false;
  for (const Point& dir : sample_directions(intervals)) {
    if (depth_at(intervals, dir) == 0) return false;
  }
  return true;
}

std::pair<int, int> coverage_range(std::span<const AngularInterval> intervals) {
  if (intervals.empty()) return {0, 0};
  int lo = static_cast<int>(intervals.size());
  int hi = 0;
  for (const Point& dir : sample_directions(intervals)) {
    int k = depth_at(intervals, dir);
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  return {lo, hi};
}

int min_ray_coverage(const CircularDrawing& d, const Point& p, std::span<const EdgeId> edges) {
  if (on_vertex_line(d, p)) {
    throw Error(ErrorKind::kDegenerateGeometry, "point is collinear with two drawn vertices");
  }
  auto ivs = intervals_of(d, p, edges);
  return coverage_range(ivs).first;
}

int min_ray_coverage(const CircularDrawing& d, const Point& p) {
  std::vector<EdgeId> all(static_cast<std::size_t>(d.graph().num_edges()));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<EdgeId>(i);
  return min_ray_coverage(d, p, all);
}

std::vector<EdgeId> peel_layer(std::span<const EdgeId> edges, const CircularDrawing& d, const Point& p) {
  std::vector<EdgeId> ids(edges.begin(), edges.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto ivs = intervals_of(d, p, ids);
  if (!is_dominant(ivs)) throw Error(ErrorKind::kNotDominant, "edge set does not cover every direction");

  std::vector<EdgeId> keep;
  std::vector<AngularInterval> kept;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < ids.size() && maximal; ++j) {
      if (i != j && ivs[i].subset_of(ivs[j])) maximal = false;
    }
    if (maximal) {
      keep.push_back(ids[i]);
      kept.push_back(ivs[i]);
    }
  }

  for (std::size_t i = 0; i < keep.size();) {
    std::vector<AngularInterval> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_dominant(trial)) {
      keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(i));
      kept = std::move(trial);
    } else {
      ++i;
    }
  }
  return keep;
}

CycleLayers extract_cycle_layers(const CircularDrawing& d, int t) {
  if (t < 0) throw Error(ErrorKind::kInvalidParameter, "t must be non-negative");
  CycleLayers out;
  Planarisation p = planarise(d);
  MapGraph m = map_graph(p);
  if (t == 0) {
    if (p.faces.size() > 1) {
      ReferencePoint rp = reference_point(p, m);
      out.center = rp.point;
      out.deepest_face = rp.face;
    }
    return out;
  }
  int rad = graph_radius(m.graph);
  if (rad < 2 * t) {
    throw Error(ErrorKind::kRadiusTooSmall,
                "rad(M_D) = " + std::to_string(rad) + " < 2t = " + std::to_string(2 * t));
  }
  ReferencePoint rp = reference_point(p, m);
  out.center = rp.point;
  out.deepest_face = rp.face;

  auto violation = [](const std::string& what) { return Error(ErrorKind::kInternalContractViolation, what); };

  std::vector<EdgeId> residual(static_cast<std::size_t>(d.graph().num_edges()));
  for (std::size_t i = 0; i < residual.size(); ++i) residual[i] = static_cast<EdgeId>(i);
  for (int i = 0; i < t; ++i) {
    std::vector<EdgeId> layer;
    try {
      layer = peel_layer(residual, d, rp.point);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNotDominant) throw;
      throw violation("residual edge set not dominant before layer " + std::to_string(i + 1));
    }
    auto ivs = intervals_of(d, rp.point, layer);
    if (coverage_range(ivs).second > 2) {
      throw violation("a ray crosses more than two edges of layer " + std::to_string(i + 1));
    }
    std::vector<EdgeId> rest;
    std::set_difference(residual.begin(), residual.end(), layer.begin(), layer.end(), std::back_inserter(rest));
    residual = std::move(rest);
    out.layers.push_back(std::move(layer));
  }

  Report r = validate_cycle_layers(crossing_graph(d), out);
  if (const Check* bad = r.first_failure()) throw violation("extracted layers fail " + bad->name);
  return out;
}

Report validate_cycle_layers(const CrossingGraph& x, const CycleLayers& layers) {
  Report r;
  const Graph& g = x.graph;
  std::set<VertexId> used;
  bool disjoint = true;
  for (const auto& layer : layers.layers) {
    for (EdgeId e : layer) {
      if (!g.has_vertex(e)) throw Error(ErrorKind::kDanglingId, "unknown edge " + std::to_string(e));
      if (!used.insert(e).second) disjoint = false;
    }
  }
  r.add_true("layers-disjoint", disjoint);

  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    const auto& layer = layers.layers[i];
    Graph c = g.induced(layer);
    bool cycle = c.num_vertices() >= 3 && c.is_connected();
    for (VertexId v : c.vertices()) cycle = cycle && c.degree(v) == 2;
    r.add_true("layer-" + std::to_string(i + 1) + "-induces-cycle", cycle);
  }

  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    for (std::size_t j = i + 1; j < layers.layers.size(); ++j) {
      std::set<VertexId> cj(layers.layers[j].begin(), layers.layers[j].end());
      long worst = -1;
      for (VertexId v : layers.layers[i]) {
        long k = 0;
        for (VertexId w : g.neighbours(v)) k += cj.count(w);
        if (worst < 0 || k < worst) worst = k;
      }
      if (worst < 0) worst = 2;
      r.add_le("layer-" + std::to_string(i + 1) + "-to-" + std::to_string(j + 1) + "-min-neighbours", 2, worst);
    }
  }

  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    std::set<VertexId> ci(layers.layers[i].begin(), layers.layers[i].end());
    long worst = 0;
    for (VertexId v : g.vertices()) {
      long k = 0;
      for (VertexId w : g.neighbours(v)) k += ci.count(w);
      worst = std::max(worst, k);
    }
    r.add_le("layer-" + std::to_string(i + 1) + "-max-neighbours", worst, 4);
  }
  return r;
}

Json to_json(const CycleLayers& c) {
  Json layers = Json::array();
  for (const auto& l : c.layers) layers.push_back(l);
  return Json{{"face", c.deepest_face}, {"center", point_json(c.center)}, {"layers", layers}};
}

CycleLayers cycle_layers_from_json(const Json& j) {
  try {
    CycleLayers c;
    c.deepest_face = j.at("face").get<int>();
    const Json& ctr = j.at("center");
    c.center = Point{parse_rational(ctr.at(0).get<std::string>()), parse_rational(ctr.at(1).get<std::string>())};
    for (const Json& l : j.at("layers")) c.layers.push_back(l.get<std::vector<EdgeId>>());
    return c;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParseError, std::string("cycle layers: ") + e.what());
  }
}

}  // namespace chordal
