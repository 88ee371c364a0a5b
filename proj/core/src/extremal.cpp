#include "chordal/extremal.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "chordal/algorithms.hpp"
#include "chordal/drawing.hpp"
#include "chordal/error.hpp"
#include "chordal/generators.hpp"
#include "chordal/planarisation.hpp"

namespace chordal {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kInvalidParameter, what);
}

// Preorder of a tree from its smallest vertex, children in ascending order.
std::vector<VertexId> dfs_preorder(const Graph& tree, std::map<VertexId, VertexId>* parent = nullptr) {
  std::vector<VertexId> order;
  if (tree.empty()) return order;
  std::set<VertexId> seen;
  std::function<void(VertexId, VertexId)> visit = [&](VertexId v, VertexId from) {
    seen.insert(v);
    order.push_back(v);
    if (parent) (*parent)[v] = from;
    for (VertexId w : tree.neighbours(v)) {
      if (!seen.count(w)) visit(w, v);
    }
  };
  visit(tree.vertices().front(), -1);
  return order;
}

std::vector<EdgeId> incident_to_any(const Graph& g, const std::vector<VertexId>& vs) {
  std::set<EdgeId> out;
  for (VertexId v : vs) {
    for (EdgeId e : g.incident_edges(v)) out.insert(e);
  }
  return {out.begin(), out.end()};
}

Rational fractional(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  Rational r = q - Rational(fl);
  r.canonicalize();
  return r;
}

}  // namespace

const Graph& LabeledConstruction::graph() const {
  return std::visit([](const auto& d) -> const Graph& { return d.graph(); }, drawing);
}

LabeledConstruction grid_row_drawing(int n) {
  require(n >= 1, "grid_row_drawing needs n >= 1");
  Graph g = grid_graph(n, n);
  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  LabeledConstruction c{"grid_row", make_circular(g, order), {}, {}, {}, {}};
  std::vector<std::vector<VertexId>> bags;
  for (int r = 0; r < n; ++r) {
    std::vector<VertexId> row;
    for (int col = 0; col < n; ++col) row.push_back(r * n + col);
    bags.push_back(incident_to_any(g, row));
  }
  c.witnesses["E_path_decomposition"] = path_decomposition(std::move(bags));
  c.notes.push_back("rows drawn consecutively; E_i = edges incident to row i");
  c.notes.push_back("path decomposition of X_D with width <= 3n and |E_i| <= 3n - 1");
  return c;
}

LabeledConstruction two_degenerate_expander(int t) {
  require(t >= 1, "two_degenerate_expander needs t >= 1");
  std::vector<std::vector<Rational>> paths(static_cast<std::size_t>(t));
  for (int i = 1; i <= t; ++i) paths[0].emplace_back(i);
  for (int s = 1; s < t; ++s) {
    Rational step(1, 1L << s);
    for (Rational x = s + step; x < t; x += 2 * step) {
      x.canonicalize();
      paths[static_cast<std::size_t>(s)].push_back(x);
    }
  }
  std::vector<Rational> xs;
  for (const auto& p : paths) xs.insert(xs.end(), p.begin(), p.end());
  std::sort(xs.begin(), xs.end());
  auto id_of = [&](const Rational& x) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.end() || *it != x) throw Error(ErrorKind::kInternalContractViolation, "missing path vertex");
    return static_cast<VertexId>(it - xs.begin());
  };

  GraphBuilder b;
  std::map<VertexId, Point> coords;
  for (const Rational& x : xs) {
    b.add_vertex(id_of(x));
    coords[id_of(x)] = Point{x, 0};
  }
  IdSets path_ids;
  for (const auto& p : paths) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < p.size(); ++i) {
      ids.push_back(id_of(p[i]));
      if (i > 0) b.add_edge(id_of(p[i - 1]), id_of(p[i]));
    }
    path_ids.push_back(std::move(ids));
  }
  std::vector<std::tuple<int, int, Edge>> horizontal;
  for (int s = 1; s < t; ++s) {
    for (int r = 0; r < s; ++r) {
      Rational hi = s + Rational(1, 1L << r);
      Rational lo = hi - Rational(1, 1L << s);
      hi.canonicalize();
      lo.canonicalize();
      Edge e(id_of(lo), id_of(hi));
      b.add_edge(e.u, e.v);
      horizontal.emplace_back(r, s, e);
    }
  }
  Graph g = b.build();
  LabeledConstruction c{"two_degenerate_expander", StraightLineDrawing(g, coords, true), {}, {}, {}, {}};
  MinorCertificate kt;
  for (int s = 0; s < t; ++s) kt.model[s] = path_ids[static_cast<std::size_t>(s)];
  c.witnesses["kt_minor"] = kt;
  c.witnesses["paths"] = path_ids;
  IdSets hs;
  for (const auto& [r, s, e] : horizontal) hs.push_back({r, s, *g.edge_id(e.u, e.v)});
  c.witnesses["horizontal"] = hs;
  c.notes.push_back("linear drawing; wrap to a circular drawing with the same crossing graph");
  c.notes.push_back("contains a K_t minor, maximum degree 3, crossing graph 2-degenerate");
  return c;
}

LabeledConstruction ktt_chord_diagram(int t) {
  require(t >= 1, "ktt_chord_diagram needs t >= 1");
  std::vector<Edge> es;
  for (int i = 1; i <= t; ++i) es.emplace_back(i - 1, 3 * t - i);
  for (int j = 1; j <= t; ++j) es.emplace_back(t + j - 1, 4 * t - j);
  Graph g = Graph::on_range(4 * t, es);
  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  LabeledConstruction c{"ktt", make_circular(g, order), {}, {}, {}, {}};
  IdSets parts(2);
  for (int i = 0; i < t; ++i) {
    parts[0].push_back(i);
    parts[1].push_back(t + i);
  }
  c.witnesses["bipartition"] = parts;
  c.notes.push_back("crossing graph is K_{t,t}: chords cross exactly across the two bundles");
  return c;
}

LabeledConstruction tree_plus_dominant(const Graph& tree) {
  if (!tree.is_tree()) throw Error(ErrorKind::kNotATree, "input is not a tree");
  if (tree.max_degree() > 3) {
    throw Error(ErrorKind::kDegreeExceeded, "tree has a vertex of degree " + std::to_string(tree.max_degree()));
  }
  VertexId apex = tree.max_vertex_id() + 1;
  GraphBuilder b;
  for (VertexId v : tree.vertices()) b.add_edge(v, apex);
  for (const Edge& e : tree.edges()) b.add_edge(e.u, e.v);
  Graph g = b.build();
  std::map<VertexId, VertexId> parent;
  std::vector<VertexId> order{apex};
  for (VertexId v : dfs_preorder(tree, &parent)) order.push_back(v);
  LabeledConstruction c{"tree_plus_dominant", make_circular(g, order), {}, {}, {}, {}};
  TreeDecomposition td;
  td.tree = tree;
  for (VertexId v : tree.vertices()) {
    std::vector<VertexId> bag{v, apex};
    if (parent.at(v) >= 0) bag.push_back(parent.at(v));
    std::sort(bag.begin(), bag.end());
    td.bags[v] = bag;
  }
  c.witnesses["width2_decomposition"] = td;
  c.values["apex"] = apex;
  c.notes.push_back("treewidth 2 for trees with >= 2 vertices; no K_{2,4} topological minor");
  return c;
}

LabeledConstruction product_drawing(const Graph& tree, int m) {
  if (!tree.is_tree()) throw Error(ErrorKind::kNotATree, "input is not a tree");
  require(m >= 1, "product_drawing needs m >= 1");
  Graph g = strong_product(tree, complete_graph(m));
  std::vector<VertexId> order;
  for (VertexId v : dfs_preorder(tree)) {
    for (int i = 0; i < m; ++i) order.push_back(tree.index_of(v) * m + i);
  }
  LabeledConstruction c{"product", make_circular(g, order), {}, {}, {}, {}};
  TreeDecomposition td;
  td.tree = tree;
  for (VertexId v : tree.vertices()) {
    std::vector<VertexId> block;
    for (int i = 0; i < m; ++i) block.push_back(tree.index_of(v) * m + i);
    td.bags[v] = incident_to_any(g, block);
  }
  c.witnesses["Wv_decomposition"] = td;
  c.notes.push_back("crossing edges share a tree vertex; W_v is a tree decomposition of X_D");
  c.notes.push_back("|W_v| <= (max tree degree + 1) * m^2");
  return c;
}

LabeledConstruction star_forest_construction(int t) {
  require(t >= 1, "star_forest_construction needs t >= 1");
  const Rational top(t + 1);
  std::vector<Point> pts;
  auto add = [&](Point p) {
    p.x.canonicalize();
    p.y.canonicalize();
    pts.push_back(std::move(p));
    return static_cast<int>(pts.size()) - 1;
  };
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> verticals;
  std::vector<std::vector<int>> level(static_cast<std::size_t>(t) + 1);

  int phi = 0;
  for (int i = 1; i <= t; ++i) {
    for (int j = i + 1; j <= t; ++j) {
      ++phi;
      int lower = add(Point{phi, i});
      int upper = add(Point{Rational(phi) + Rational(1, 4), j});
      verticals.emplace_back(lower, upper);
      level[static_cast<std::size_t>(i)].push_back(lower);
      level[static_cast<std::size_t>(j)].push_back(upper);
    }
  }
  if (t == 1) level[1].push_back(add(Point{1, 1}));
  auto by_x = [&](int a, int b) { return pts[static_cast<std::size_t>(a)].x < pts[static_cast<std::size_t>(b)].x; };
  for (int i = 1; i <= t; ++i) {
    auto& row = level[static_cast<std::size_t>(i)];
    std::sort(row.begin(), row.end(), by_x);
    for (int v : row) verticals.emplace_back(v, add(Point{pts[static_cast<std::size_t>(v)].x, top}));
  }

  for (int i = 1; i <= t; ++i) {
    const Rational y(i);
    const auto& row = level[static_cast<std::size_t>(i)];
    std::vector<int> path;
    for (std::size_t k = 0; k < row.size(); ++k) {
      path.push_back(row[k]);
      if (k + 1 == row.size()) break;
      const Rational& x0 = pts[static_cast<std::size_t>(row[k])].x;
      const Rational& x1 = pts[static_cast<std::size_t>(row[k + 1])].x;
      std::vector<Rational> hits;
      for (const auto& [a, b] : verticals) {
        Point pa = pts[static_cast<std::size_t>(a)];
        Point pb = pts[static_cast<std::size_t>(b)];
        if (pb.y < pa.y) std::swap(pa, pb);
        if (!(pa.y < y && y < pb.y)) continue;
        Rational x = pa.x + (y - pa.y) * (pb.x - pa.x) / (pb.y - pa.y);
        if (x0 < x && x < x1) hits.push_back(x);
      }
      std::sort(hits.begin(), hits.end());
      for (std::size_t h = 0; h + 1 < hits.size(); ++h) {
        Rational mid = (hits[h] + hits[h + 1]) / 2;
        int v = add(Point{mid, y});
        verticals.emplace_back(v, add(Point{mid, top}));
        path.push_back(v);
      }
    }
    level[static_cast<std::size_t>(i)] = path;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) edges.emplace_back(path[k], path[k + 1]);
  }
  edges.insert(edges.end(), verticals.begin(), verticals.end());
  std::vector<int> top_row;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    if (pts[v].y == top) top_row.push_back(static_cast<int>(v));
  }
  std::sort(top_row.begin(), top_row.end(), by_x);
  std::set<Edge> top_edges_raw;
  for (std::size_t k = 0; k + 1 < top_row.size(); ++k) {
    edges.emplace_back(top_row[k], top_row[k + 1]);
    top_edges_raw.insert(Edge(top_row[k], top_row[k + 1]));
  }

  // ids in (y, x) order, so each horizontal path and the top path are contiguous
  std::vector<int> rank(pts.size());
  for (std::size_t v = 0; v < pts.size(); ++v) rank[v] = static_cast<int>(v);
  std::sort(rank.begin(), rank.end(), [&](int a, int b) {
    const Point& pa = pts[static_cast<std::size_t>(a)];
    const Point& pb = pts[static_cast<std::size_t>(b)];
    return pa.y != pb.y ? pa.y < pb.y : pa.x < pb.x;
  });
  std::vector<VertexId> id(pts.size());
  for (std::size_t k = 0; k < rank.size(); ++k) id[static_cast<std::size_t>(rank[k])] = static_cast<VertexId>(k);

  GraphBuilder b;
  std::map<VertexId, Point> coords;
  for (std::size_t v = 0; v < pts.size(); ++v) {
    b.add_vertex(id[v]);
    coords[id[v]] = pts[v];
  }
  for (const auto& [u, v] : edges) b.add_edge(id[static_cast<std::size_t>(u)], id[static_cast<std::size_t>(v)]);
  Graph g1 = b.build();
  StraightLineDrawing d1(g1, coords, false);
  CrossingGraph x1 = crossing_graph(d1);

  // contract the top path into one apex
  const VertexId apex = id[static_cast<std::size_t>(top_row.front())];
  std::set<VertexId> top_ids;
  for (int v : top_row) top_ids.insert(id[static_cast<std::size_t>(v)]);
  auto image = [&](VertexId v) { return top_ids.count(v) ? apex : v; };
  GraphBuilder gb;
  std::map<EdgeId, Edge> contracted_of;
  for (EdgeId e = 0; e < g1.num_edges(); ++e) {
    const Edge& ed = g1.edge(e);
    if (top_ids.count(ed.u) && top_ids.count(ed.v)) continue;
    Edge c(image(ed.u), image(ed.v));
    gb.add_edge(c.u, c.v);
    contracted_of[e] = c;
  }
  Graph g = gb.build();
  std::vector<Edge> xe;
  for (const Edge& xed : x1.graph.edges()) {
    auto a = contracted_of.find(xed.u);
    auto c = contracted_of.find(xed.v);
    if (a == contracted_of.end() || c == contracted_of.end()) continue;
    xe.emplace_back(*g.edge_id(a->second.u, a->second.v), *g.edge_id(c->second.u, c->second.v));
  }

  LabeledConstruction out{"star_forest", d1, {}, {}, {}, {}};
  out.graphs["contracted"] = g;
  out.graphs["contracted_crossing_graph"] = Graph::on_range(g.num_edges(), std::move(xe));

  IdSets stars;
  for (const auto& comp : x1.graph.components()) {
    if (comp.size() >= 2) stars.push_back(comp);
  }
  out.witnesses["star_forest"] = stars;
  out.witnesses["radius1"] = IdSets{{apex}};
  MinorCertificate kt1;
  IdSets horizontal;
  for (int i = 1; i <= t; ++i) {
    std::vector<int> ids;
    for (int v : level[static_cast<std::size_t>(i)]) ids.push_back(id[static_cast<std::size_t>(v)]);
    std::sort(ids.begin(), ids.end());
    kt1.model[i - 1] = ids;
    horizontal.push_back(ids);
  }
  kt1.model[t] = {apex};
  out.witnesses["kt1_minor"] = kt1;
  out.witnesses["horizontal_paths"] = horizontal;
  out.values["apex"] = apex;
  out.notes.push_back("every crossing is vertical-horizontal; each horizontal edge is crossed at most once");
  out.notes.push_back("contracting the top path gives radius 1; contracting each horizontal path gives K_{t+1}");
  return out;
}

LabeledConstruction nested_polygon_drawing(int layers, int m) {
  require(layers >= 1, "nested_polygon_drawing needs layers >= 1");
  require(m >= 3, "nested_polygon_drawing needs m >= 3");
  struct End {
    Rational pos;
    int chord;
    int side;
  };
  std::vector<End> ends;
  for (int k = 0; k < layers; ++k) {
    Rational span = layers == 1 ? Rational(7, 4) : Rational(8, 5) + Rational(3 * k, 10 * (layers - 1));
    span /= m;
    for (int i = 0; i < m; ++i) {
      Rational start = Rational(i, m) + Rational(k, 4 * m);
      int chord = k * m + i;
      ends.push_back(End{fractional(start), chord, 0});
      ends.push_back(End{fractional(start + span), chord, 1});
    }
  }
  std::sort(ends.begin(), ends.end(), [](const End& a, const End& b) {
    return std::tie(a.pos, a.chord, a.side) < std::tie(b.pos, b.chord, b.side);
  });
  std::vector<std::pair<VertexId, VertexId>> chord_ends(ends.size() / 2, {-1, -1});
  for (std::size_t p = 0; p < ends.size(); ++p) {
    auto& ce = chord_ends[static_cast<std::size_t>(ends[p].chord)];
    (ends[p].side == 0 ? ce.first : ce.second) = static_cast<VertexId>(p);
  }
  std::vector<Edge> es;
  for (const auto& [a, b] : chord_ends) es.emplace_back(a, b);
  Graph g = Graph::on_range(static_cast<int>(ends.size()), es);
  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  LabeledConstruction c{"nested_polygon", make_circular(g, order), {}, {}, {}, {}};
  IdSets rings(static_cast<std::size_t>(layers));
  for (int k = 0; k < layers; ++k) {
    for (int i = 0; i < m; ++i) {
      const auto& [a, b] = chord_ends[static_cast<std::size_t>(k * m + i)];
      rings[static_cast<std::size_t>(k)].push_back(*g.edge_id(a, b));
    }
    std::sort(rings[static_cast<std::size_t>(k)].begin(), rings[static_cast<std::size_t>(k)].end());
  }
  c.witnesses["rings"] = rings;
  Planarisation p = planarise(std::get<CircularDrawing>(c.drawing));
  c.values["map_radius"] = graph_radius(map_graph(p).graph);
  c.notes.push_back("each ring induces a cycle in X_D; map_radius is computed, not guaranteed");
  return c;
}

std::vector<Graph> k2n_subdivisions(int n, int max_division, int max_vertices) {
  require(n >= 1, "K_{2,n} needs n >= 1");
  require(max_division >= 0, "max_division must be non-negative");
  if (2 + n + max_division > max_vertices) {
    throw Error(ErrorKind::kTooLargeInstance, "members would have " + std::to_string(2 + n + max_division) +
                                                  " vertices (cap " + std::to_string(max_vertices) + ")");
  }
  // Middle vertices have degree 2, so a member is determined by the multiset
  // of division counts on its x-y paths (for n <= 2, by the total alone).
  std::vector<std::vector<int>> members;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int budget) {
    if (left == 0) {
      members.push_back(cur);
      return;
    }
    int from = cur.empty() ? 0 : cur.back();
    for (int k = from; k <= budget; ++k) {
      cur.push_back(k);
      rec(left - 1, budget - k);
      cur.pop_back();
    }
  };
  if (n <= 2) {
    for (int total = 0; total <= max_division; ++total) {
      std::vector<int> m(static_cast<std::size_t>(n), 0);
      m.back() = total;
      members.push_back(m);
    }
  } else {
    rec(n, max_division);
  }
  auto total = [](const std::vector<int>& m) { return std::accumulate(m.begin(), m.end(), 0); };
  std::stable_sort(members.begin(), members.end(), [&](const auto& a, const auto& b) {
    return std::make_pair(total(a), a) < std::make_pair(total(b), b);
  });

  std::vector<Graph> out;
  for (const auto& divisions : members) {
    GraphBuilder b;
    VertexId next = n + 2;
    for (int i = 0; i < n; ++i) {
      VertexId mid = 2 + i;
      VertexId prev = 0;
      for (int k = 0; k < divisions[static_cast<std::size_t>(i)]; ++k) {
        b.add_edge(prev, next);
        prev = next++;
      }
      b.add_edge(prev, mid);
      b.add_edge(mid, 1);
    }
    out.push_back(b.build());
  }
  return out;
}

std::vector<Graph> k2n_subdivision_suite(int t, int max_division) {
  require(t >= 1, "K_{2,4t} suite needs t >= 1");
  return k2n_subdivisions(4 * t, max_division);
}

Json to_json(const Witness& w) {
  return std::visit([](const auto& x) -> Json {
    using T = std::decay_t<decltype(x)>;
    if constexpr (std::is_same_v<T, IdSets>) {
      Json j = Json::array();
      for (const auto& s : x) j.push_back(s);
      return Json{{"sets", j}};
    } else {
      return to_json(x);
    }
  }, w);
}

Json witnesses_json(const LabeledConstruction& c) {
  Json w = Json::object();
  for (const auto& [name, witness] : c.witnesses) w[name] = to_json(witness);
  Json graphs = Json::object();
  for (const auto& [name, g] : c.graphs) graphs[name] = to_json(g);
  Json values = Json::object();
  for (const auto& [name, v] : c.values) values[name] = v;
  return Json{{"name", c.name}, {"witnesses", w}, {"graphs", graphs}, {"values", values}, {"notes", c.notes}};
}

}  // namespace chordal
