#include "chordal/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "chordal/algorithms.hpp"
#include "chordal/dominance.hpp"
#include "chordal/enumeration.hpp"
#include "chordal/error.hpp"
#include "chordal/extremal.hpp"
#include "chordal/generators.hpp"
#include "chordal/hadwiger.hpp"
#include "chordal/topological.hpp"
#include "chordal/transforms.hpp"
#include "chordal/treewidth.hpp"

namespace chordal {

Json to_json(const VerificationReport& r) {
  Json j{{"suite", r.suite}, {"instances", r.instances}, {"pass", r.ok()}};
  Json failures = Json::array();
  for (const SuiteFailure& f : r.failures) {
    Json e{{"instance", f.instance}, {"name", f.name}, {"lhs", f.lhs}, {"rhs", f.rhs}};
    if (!f.detail.empty()) e["detail"] = f.detail;
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  j["skipped"] = r.skipped;
  j["counts"] = Json::object();
  for (const auto& [k, v] : r.counts) j["counts"][k] = v;
  j["notes"] = r.notes;
  if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
  return j;
}

CircularDrawing random_circular_drawing(std::mt19937_64& rng, int max_n, int max_edges) {
  if (max_n < 3) throw Error(ErrorKind::kInvalidParameter, "random drawings need max_n >= 3");
  int n = std::uniform_int_distribution<int>(3, max_n)(rng);
  int most = std::min(max_edges, n * (n - 1) / 2);
  if (most < n - 1) throw Error(ErrorKind::kInvalidParameter, "max_edges below a spanning tree");
  int m = std::uniform_int_distribution<int>(n - 1, most)(rng);
  std::set<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(edges.size()) < m) {
    int a = pick(rng);
    int b = pick(rng);
    if (a != b) edges.emplace(a, b);
  }
  Graph g = Graph::on_range(n, std::vector<Edge>(edges.begin(), edges.end()));
  std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
  std::shuffle(order.begin(), order.end(), rng);
  return make_circular(g, order);
}

namespace {

std::string rooted_code(const std::vector<std::vector<int>>& adj, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : adj[static_cast<std::size_t>(v)]) {
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  }
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// AHU code rooted at the centre, minimised over the (at most two) centres.
std::string tree_code(const Graph& t) {
  int n = t.num_vertices();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : t.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer) {
      for (int w : adj[static_cast<std::size_t>(v)]) {
        if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    std::string code = rooted_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

}  // namespace

std::vector<Graph> nonisomorphic_trees(int n) {
  if (n < 1) throw Error(ErrorKind::kInvalidParameter, "trees need at least one vertex");
  if (n <= 2) return {Graph::on_range(n, n == 2 ? std::vector<Edge>{{0, 1}} : std::vector<Edge>{})};
  std::map<std::string, Graph> seen;
  std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    // Pruefer decoding
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[static_cast<std::size_t>(c)];
    std::vector<Edge> edges;
    for (int c : code) {
      int leaf = 0;
      while (degree[static_cast<std::size_t>(leaf)] != 1) ++leaf;
      edges.emplace_back(leaf, c);
      --degree[static_cast<std::size_t>(leaf)];
      --degree[static_cast<std::size_t>(c)];
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
      if (degree[static_cast<std::size_t>(v)] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    Graph t = Graph::on_range(n, std::move(edges));
    seen.emplace(tree_code(t), t);
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) break;
  }
  std::vector<Graph> out;
  for (auto& [_, t] : seen) out.push_back(std::move(t));
  return out;
}

bool is_star_forest(const Graph& g) {
  for (const auto& comp : g.components()) {
    if (comp.size() <= 2) continue;
    int centres = 0;
    for (VertexId v : comp) centres += g.degree(v) > 1 ? 1 : 0;
    if (centres != 1 || g.induced(comp).num_edges() != static_cast<int>(comp.size()) - 1) return false;
  }
  return true;
}

CircularDrawing cycle_layer_fixture(int t) {
  static const std::map<int, std::pair<int, int>> kMeasured{{1, {2, 5}}, {2, {4, 4}}, {3, {7, 4}}};
  if (t < 1) throw Error(ErrorKind::kInvalidParameter, "t must be positive");
  auto it = kMeasured.find(t);
  if (it != kMeasured.end()) {
    return std::get<CircularDrawing>(nested_polygon_drawing(it->second.first, it->second.second).drawing);
  }
  for (int layers = 2 * t + 1; layers <= 6 * t; ++layers) {
    LabeledConstruction c = nested_polygon_drawing(layers, 4);
    if (c.values.at("map_radius") >= 2 * t) return std::get<CircularDrawing>(c.drawing);
  }
  throw Error(ErrorKind::kInvalidParameter, "no nested polygon fixture reaches radius " + std::to_string(2 * t));
}

namespace {

struct Outcome {
  std::vector<SuiteFailure> failures;
  long skipped = 0;
  std::map<std::string, long> counts;

  void absorb(const std::string& instance, const Report& r) {
    for (const Check& c : r.checks) {
      if (c.skipped) {
        ++skipped;
      } else if (!c.pass) {
        failures.push_back(SuiteFailure{instance, c.name, c.lhs, c.rhs, c.detail});
      }
    }
  }
};

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) fn(i);
  };
  int threads = std::min(std::max(jobs, 1), std::max(n, 1));
  if (threads == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (int k = 0; k < threads; ++k) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

// Runs fn on every instance (possibly in parallel) and merges outcomes in
// instance order. Library errors become failures of that instance.
void run_instances(VerificationReport& report, const std::vector<std::string>& names, int jobs,
                   const std::function<void(int, Outcome&)>& fn) {
  std::vector<Outcome> outcomes(names.size());
  parallel_for(static_cast<int>(names.size()), jobs, [&](int i) {
    Outcome& out = outcomes[static_cast<std::size_t>(i)];
    try {
      fn(i, out);
    } catch (const std::exception& e) {
      out.failures.push_back(SuiteFailure{names[static_cast<std::size_t>(i)], "error", 0, 0, e.what()});
    }
  });
  report.instances += static_cast<long>(names.size());
  for (Outcome& o : outcomes) {
    for (SuiteFailure& f : o.failures) report.failures.push_back(std::move(f));
    report.skipped += o.skipped;
    for (const auto& [k, v] : o.counts) report.counts[k] += v;
  }
}

std::vector<int> params_or(const std::vector<int>& given, std::vector<int> fallback) {
  return given.empty() ? fallback : given;
}

std::string label(const char* key, int value) { return std::string(key) + "=" + std::to_string(value); }

std::string order_string(const std::vector<VertexId>& order) {
  std::ostringstream s;
  for (std::size_t i = 0; i < order.size(); ++i) s << (i ? " " : "") << order[i];
  return s.str();
}

std::vector<CircularDrawing> random_drawings(const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  std::vector<CircularDrawing> out;
  for (int i = 0; i < o.seeds; ++i) out.push_back(random_circular_drawing(rng, o.max_vertices, o.max_edges));
  return out;
}

std::vector<std::string> drawing_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("drawing-" + std::to_string(i));
  return names;
}

void width_bounds_suite(VerificationReport& r, const SuiteOptions& o) {
  auto drawings = random_drawings(o);
  BoundsOptions bo{o.caps, o.force, o.minor_chain};
  run_instances(r, drawing_names(drawings.size()), o.jobs, [&](int i, Outcome& out) {
    WidthBounds b = check_width_bounds(drawings[static_cast<std::size_t>(i)], bo);
    out.absorb("drawing-" + std::to_string(i), b.report);
  });
}

void triangulation_suite(VerificationReport& r, const SuiteOptions& o) {
  auto drawings = random_drawings(o);
  run_instances(r, drawing_names(drawings.size()), o.jobs, [&](int i, Outcome& out) {
    Planarisation p = planarise(drawings[static_cast<std::size_t>(i)]);
    Triangulation t = triangulate_via_map(p);
    out.absorb("drawing-" + std::to_string(i), validate_triangulation(p, t));
  });
}

void cycle_layers_suite(VerificationReport& r, const SuiteOptions& o) {
  auto ts = params_or(o.params, {1, 2, 3});
  std::vector<std::string> names;
  for (int t : ts) names.push_back(label("t", t));
  run_instances(r, names, o.jobs, [&](int i, Outcome& out) {
    int t = ts[static_cast<std::size_t>(i)];
    CircularDrawing d = cycle_layer_fixture(t);
    Report rep;
    rep.add_le("2t <= rad(M_D)", 2L * t, graph_radius(map_graph(planarise(d)).graph));
    CycleLayers layers = extract_cycle_layers(d, t);
    rep.add_eq("layer-count", static_cast<long>(layers.layers.size()), t);
    for (Check& c : validate_cycle_layers(crossing_graph(d), layers).checks) rep.checks.push_back(std::move(c));
    out.absorb(names[static_cast<std::size_t>(i)], rep);
  });
}

void expander_suite(VerificationReport& r, const SuiteOptions& o) {
  auto ts = params_or(o.params, {1, 2, 3, 4, 5, 6});
  std::vector<std::string> names;
  for (int t : ts) names.push_back(label("t", t));
  run_instances(r, names, o.jobs, [&](int i, Outcome& out) {
    int t = ts[static_cast<std::size_t>(i)];
    LabeledConstruction c = two_degenerate_expander(t);
    const auto& d = std::get<StraightLineDrawing>(c.drawing);
    const Graph& g = d.graph();
    Graph x = crossing_graph(d).graph;
    Report rep;
    rep.add_eq("max-degree(G_t) = 3", g.max_degree(), 3);
    rep.add_le("degeneracy(X_D) <= 2", degeneracy(x).value, 2);
    rep.add_true("wrapped-crossing-graph-agrees", crossing_graph(wrap_linear(d)).graph == x);
    rep.add_true("kt-minor-valid",
                 validate_minor_certificate(g, complete_graph(t), std::get<MinorCertificate>(c.witnesses.at("kt_minor"))));
    const auto& horizontal = std::get<IdSets>(c.witnesses.at("horizontal"));
    rep.add_eq("horizontal-edge-count", static_cast<long>(horizontal.size()), static_cast<long>(t) * (t - 1) / 2);
    std::vector<std::pair<Rational, Rational>> spans;
    long crossed = 0;
    for (const auto& h : horizontal) {
      const Edge& e = g.edge(h[2]);
      Rational a = d.position(e.u).x;
      Rational b = d.position(e.v).x;
      spans.emplace_back(std::min(a, b), std::max(a, b));
      crossed += x.degree(h[2]) > 0 ? 1 : 0;
    }
    rep.add_eq("crossed-horizontal-edges", crossed, 0);
    long overlapping = 0;
    for (std::size_t a = 0; a < spans.size(); ++a)
      for (std::size_t b = a + 1; b < spans.size(); ++b)
        if (!(spans[a].second < spans[b].first || spans[b].second < spans[a].first)) ++overlapping;
    rep.add_eq("overlapping-intervals", overlapping, 0);
    out.absorb(names[static_cast<std::size_t>(i)], rep);
  });
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

// Splits the order space of g into chunks and runs check on every order.
void exhaustive_orders(VerificationReport& r, const SuiteOptions& o, const std::string& instance, const Graph& g,
                       const std::function<void(const std::vector<VertexId>&, Outcome&)>& check) {
  CircularOrderEnumerator en(g, o.caps.enumeration);
  int chunks = std::max(o.jobs, 1) * 4;
  std::vector<std::string> names(static_cast<std::size_t>(chunks), instance);
  run_instances(r, names, o.jobs, [&](int i, Outcome& out) {
    auto [begin, end] = en.chunk(i, chunks);
    en.for_each_order(begin, end, [&](const std::vector<VertexId>& order) {
      ++out.counts["orders"];
      check(order, out);
    });
  });
  r.instances -= chunks - 1;
  long n = g.num_vertices();
  auto expected = static_cast<long>(factorial(static_cast<int>(n) - 1) / 2);
  if (static_cast<long>(en.count()) != expected) {
    r.failures.push_back(SuiteFailure{instance, "order-count = (n-1)!/2", static_cast<long>(en.count()), expected, {}});
  }
}

void nok2k_suite(VerificationReport& r, const SuiteOptions& o) {
  for (int k : params_or(o.params, {1, 2})) {
    if (k < 1) throw Error(ErrorKind::kInvalidParameter, "k must be positive");
    Graph g = complete_bipartite_graph(2, 4 * k - 1);
    std::string instance = "K_{2," + std::to_string(4 * k - 1) + "}";
    long before = r.counts["orders"];
    exhaustive_orders(r, o, instance, g, [&](const std::vector<VertexId>& order, Outcome& out) {
      Graph x = crossing_graph_of_order(g, order);
      if (!has_kst_subgraph(x, k, k)) {
        out.failures.push_back(SuiteFailure{instance, "K_{k,k} subgraph of X_D", 0, 1, "order " + order_string(order)});
      }
    });
    r.counts[label("orders_k", k)] = r.counts["orders"] - before;
  }
}

// Some component of X_D holds an edge at x and an edge at y.
bool component_touches_both(const Graph& g, const Graph& x, VertexId a, VertexId b) {
  for (const auto& comp : x.components()) {
    bool at_a = false;
    bool at_b = false;
    for (EdgeId e : comp) {
      at_a = at_a || g.edge(e).has(a);
      at_b = at_b || g.edge(e).has(b);
    }
    if (at_a && at_b) return true;
  }
  return false;
}

void k2n_suite(VerificationReport& r, const SuiteOptions& o) {
  std::vector<Graph> three = k2n_subdivisions(3, o.max_division);
  std::vector<Graph> four = k2n_subdivision_suite(1, o.max_division);
  r.counts["k23_members"] = static_cast<long>(three.size());
  r.counts["k24_members"] = static_cast<long>(four.size());
  long before = r.counts["orders"];
  for (std::size_t i = 0; i < three.size(); ++i) {
    const Graph& g = three[i];
    std::string instance = "K_{2,3} member " + std::to_string(i);
    exhaustive_orders(r, o, instance, g, [&](const std::vector<VertexId>& order, Outcome& out) {
      if (!component_touches_both(g, crossing_graph_of_order(g, order), 0, 1)) {
        out.failures.push_back(SuiteFailure{instance, "component at both x and y", 0, 1, "order " + order_string(order)});
      }
    });
  }
  r.counts["k23_orders"] = r.counts["orders"] - before;
  before = r.counts["orders"];
  for (std::size_t i = 0; i < four.size(); ++i) {
    const Graph& g = four[i];
    std::string instance = "K_{2,4} member " + std::to_string(i);
    exhaustive_orders(r, o, instance, g, [&](const std::vector<VertexId>& order, Outcome& out) {
      if (crossing_graph_of_order(g, order).num_edges() == 0) {
        out.failures.push_back(SuiteFailure{instance, "1 <= crossings", 0, 1, "order " + order_string(order)});
      }
    });
  }
  r.counts["k24_orders"] = r.counts["orders"] - before;
}

void grid_suite(VerificationReport& r, const SuiteOptions& o) {
  auto ns = params_or(o.params, {2, 3, 4});
  std::vector<std::string> names;
  for (int n : ns) names.push_back(label("n", n));
  run_instances(r, names, o.jobs, [&](int i, Outcome& out) {
    int n = ns[static_cast<std::size_t>(i)];
    LabeledConstruction c = grid_row_drawing(n);
    Graph x = crossing_graph(std::get<CircularDrawing>(c.drawing)).graph;
    const auto& td = std::get<TreeDecomposition>(c.witnesses.at("E_path_decomposition"));
    Report rep;
    bool valid = is_valid_decomposition(x, td);
    rep.add_true("E-decomposition-valid", valid);
    if (valid) rep.add_le("width(E) <= 3n", td.width(), 3L * n);
    long largest = 0;
    for (const auto& [_, bag] : td.bags) largest = std::max(largest, static_cast<long>(bag.size()));
    rep.add_le("|E_i| <= 3n-1", largest, 3L * n - 1);
    if (n * n <= o.caps.treewidth || o.force) {
      rep.add_eq("tw(grid(n)) = n", treewidth_auto(grid_graph(n, n), o.caps.treewidth).width, n);
    } else {
      rep.add_skipped("tw(grid(n)) = n", "grid above treewidth cap");
    }
    out.absorb(names[static_cast<std::size_t>(i)], rep);
  });
}

void product_suite(VerificationReport& r, const SuiteOptions& o) {
  int max_n = o.params.empty() ? 6 : o.params.front();
  auto ms = params_or(o.params2, {2, 3});
  std::vector<Graph> trees;
  for (int n = 1; n <= max_n; ++n) {
    for (Graph& t : nonisomorphic_trees(n)) {
      if (t.max_degree() <= 3) trees.push_back(std::move(t));
    }
  }
  r.counts["trees"] = static_cast<long>(trees.size());
  std::vector<std::pair<std::size_t, int>> cases;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < trees.size(); ++k) {
    for (int m : ms) {
      cases.emplace_back(k, m);
      names.push_back("tree-" + std::to_string(k) + " (n=" + std::to_string(trees[k].num_vertices()) + ") m=" +
                      std::to_string(m));
    }
  }
  run_instances(r, names, o.jobs, [&](int i, Outcome& out) {
    auto [k, m] = cases[static_cast<std::size_t>(i)];
    const Graph& tree = trees[k];
    LabeledConstruction c = product_drawing(tree, m);
    Graph x = crossing_graph(std::get<CircularDrawing>(c.drawing)).graph;
    const auto& td = std::get<TreeDecomposition>(c.witnesses.at("Wv_decomposition"));
    Report rep;
    bool valid = is_valid_decomposition(x, td);
    rep.add_true("Wv-decomposition-valid", valid);
    if (valid) rep.add_le("width(W) <= (maxdeg(T)+1)m^2-1", td.width(), (tree.max_degree() + 1L) * m * m - 1);
    out.absorb(names[static_cast<std::size_t>(i)], rep);
  });
}

void star_forest_suite(VerificationReport& r, const SuiteOptions& o) {
  auto ts = params_or(o.params, {2, 3, 4, 5});
  std::vector<std::string> names;
  for (int t : ts) names.push_back(label("t", t));
  run_instances(r, names, o.jobs, [&](int i, Outcome& out) {
    int t = ts[static_cast<std::size_t>(i)];
    LabeledConstruction c = star_forest_construction(t);
    const auto& d1 = std::get<StraightLineDrawing>(c.drawing);
    const Graph& g = c.graphs.at("contracted");
    Report rep;
    rep.add_true("X_{D_1}-star-forest", is_star_forest(crossing_graph(d1).graph));
    rep.add_true("X_D-star-forest", is_star_forest(c.graphs.at("contracted_crossing_graph")));
    rep.add_eq("radius(G) = 1", graph_radius(g), 1);
    rep.add_true("kt1-minor-valid", validate_minor_certificate(g, complete_graph(t + 1),
                                                               std::get<MinorCertificate>(c.witnesses.at("kt1_minor"))));
    out.absorb(names[static_cast<std::size_t>(i)], rep);
  });
}

void ktt_suite(VerificationReport& r, const SuiteOptions& o) {
  auto ts = params_or(o.params, {2, 3});
  std::vector<std::string> names;
  for (int t : ts) names.push_back(label("t", t));
  std::vector<std::string> notes(ts.size());
  run_instances(r, names, o.jobs, [&](int i, Outcome& out) {
    int t = ts[static_cast<std::size_t>(i)];
    LabeledConstruction c = ktt_chord_diagram(t);
    Graph x = crossing_graph(std::get<CircularDrawing>(c.drawing)).graph;
    Report rep;
    // a_1..a_t are edges 0..t-1 and b_1..b_t are t..2t-1, matching side A first
    rep.add_true("X_D = K_{t,t}", x == complete_bipartite_graph(t, t));
    rep.add_eq("tw(X_D) = t", treewidth_auto(x, o.caps.treewidth).width, t);
    int h = hadwiger_exact(x, o.caps.hadwiger).value;
    rep.add_eq("h(X_D) = t+1", h, t + 1);
    int ht = hajos_exact(x, o.caps.hajos).value;
    rep.add_le("h_top(X_D) <= h(X_D)", ht, h);
    notes[static_cast<std::size_t>(i)] = "t=" + std::to_string(t) + ": h=" + std::to_string(h) +
                                         " h_top=" + std::to_string(ht);
    out.absorb(names[static_cast<std::size_t>(i)], rep);
  });
  for (auto& n : notes) r.notes.push_back(std::move(n));
}

using SuiteFn = void (*)(VerificationReport&, const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> kSuites{
      {"width-bounds", width_bounds_suite}, {"triangulation", triangulation_suite},
      {"cycle-layers", cycle_layers_suite}, {"expander", expander_suite},
      {"nok2k", nok2k_suite},               {"k2n-subdivisions", k2n_suite},
      {"grid", grid_suite},                 {"product", product_suite},
      {"star-forest", star_forest_suite},   {"ktt", ktt_suite},
  };
  return kSuites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
  }();
  return kNames;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
  for (const auto& [n, fn] : registry()) {
    if (n != name) continue;
    VerificationReport r;
    r.suite = name;
    fn(r, options);
    return r;
  }
  throw Error(ErrorKind::kInvalidParameter, "unknown suite " + name);
}

}  // namespace chordal
