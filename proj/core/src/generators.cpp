#include "chordal/generators.hpp"

#include <random>
#include <string>

#include "chordal/error.hpp"

namespace chordal {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kInvalidParameter, what);
}

int param(std::span<const int> params, std::size_t i, const char* family) {
  require(params.size() > i, std::string(family) + ": missing parameter " + std::to_string(i));
  return params[i];
}

}  // namespace

std::optional<GraphFamily> parse_family(std::string_view name) {
  if (name == "grid") return GraphFamily::kGrid;
  if (name == "complete") return GraphFamily::kComplete;
  if (name == "complete_bipartite") return GraphFamily::kCompleteBipartite;
  if (name == "complete_binary_tree") return GraphFamily::kCompleteBinaryTree;
  if (name == "path") return GraphFamily::kPath;
  if (name == "cycle") return GraphFamily::kCycle;
  if (name == "random_tree") return GraphFamily::kRandomTree;
  return std::nullopt;
}

Graph generate(GraphFamily family, std::span<const int> params, std::uint64_t seed) {
  switch (family) {
    case GraphFamily::kGrid: {
      int rows = param(params, 0, "grid");
      int cols = params.size() > 1 ? params[1] : rows;
      return grid_graph(rows, cols);
    }
    case GraphFamily::kComplete:
      return complete_graph(param(params, 0, "complete"));
    case GraphFamily::kCompleteBipartite:
      return complete_bipartite_graph(param(params, 0, "complete_bipartite"),
                                      param(params, 1, "complete_bipartite"));
    case GraphFamily::kCompleteBinaryTree:
      return complete_binary_tree(param(params, 0, "complete_binary_tree"));
    case GraphFamily::kPath:
      return path_graph(param(params, 0, "path"));
    case GraphFamily::kCycle:
      return cycle_graph(param(params, 0, "cycle"));
    case GraphFamily::kRandomTree: {
      int size = param(params, 0, "random_tree");
      int max_degree = param(params, 1, "random_tree");
      std::uint64_t s = params.size() > 2 ? static_cast<std::uint64_t>(params[2]) : seed;
      return random_tree(size, max_degree, s);
    }
  }
  throw Error(ErrorKind::kInvalidParameter, "unknown family");
}

Graph grid_graph(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      int id = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(id, id + 1);
      if (r + 1 < rows) edges.emplace_back(id, id + cols);
    }
  }
  return Graph::on_range(rows * cols, std::move(edges));
}

Graph complete_graph(int n) {
  require(n >= 0, "complete needs n >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::on_range(n, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  require(a >= 0 && b >= 0, "complete_bipartite needs a, b >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  return Graph::on_range(a + b, std::move(edges));
}

Graph complete_binary_tree(int height) {
  require(height >= 0 && height <= 20, "complete_binary_tree needs 0 <= height <= 20");
  int n = (1 << (height + 1)) - 1;
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back((i - 1) / 2, i);
  return Graph::on_range(n, std::move(edges));
}

Graph path_graph(int n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::on_range(n, std::move(edges));
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::on_range(n, std::move(edges));
}

Graph random_tree(int size, int max_degree, std::uint64_t seed) {
  require(size >= 1, "random_tree needs size >= 1");
  require(max_degree >= 2 || (max_degree == 1 && size <= 2), "random_tree max_degree too small for size");
  std::mt19937_64 rng(seed);
  std::vector<int> degree(static_cast<std::size_t>(size), 0);
  std::vector<Edge> edges;
  for (int v = 1; v < size; ++v) {
    std::vector<int> open;
    for (int u = 0; u < v; ++u)
      if (degree[static_cast<std::size_t>(u)] < max_degree) open.push_back(u);
    std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
    int u = open[pick(rng)];
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
    edges.emplace_back(u, v);
  }
  return Graph::on_range(size, std::move(edges));
}

Graph strong_product(const Graph& g, const Graph& h) {
  require(!g.empty() && !h.empty(), "strong_product needs nonempty factors");
  const int nh = h.num_vertices();
  auto id = [&](int gi, int hi) { return gi * nh + hi; };
  GraphBuilder b;
  auto gv = g.vertices();
  auto hv = h.vertices();
  for (int i = 0; i < g.num_vertices(); ++i) {
    for (int j = 0; j < nh; ++j) {
      b.set_label(id(i, j), "(" + std::to_string(gv[static_cast<std::size_t>(i)]) + "," +
                                std::to_string(hv[static_cast<std::size_t>(j)]) + ")");
    }
  }
  // v = v' and ww' in E(H)
  for (int i = 0; i < g.num_vertices(); ++i)
    for (const Edge& e : h.edges()) b.add_edge(id(i, h.index_of(e.u)), id(i, h.index_of(e.v)));
  for (const Edge& e : g.edges()) {
    int a = g.index_of(e.u);
    int c = g.index_of(e.v);
    // w = w' and vv' in E(G)
    for (int j = 0; j < nh; ++j) b.add_edge(id(a, j), id(c, j));
    // vv' in E(G) and ww' in E(H)
    for (const Edge& f : h.edges()) {
      int x = h.index_of(f.u);
      int y = h.index_of(f.v);
      b.add_edge(id(a, x), id(c, y));
      b.add_edge(id(a, y), id(c, x));
    }
  }
  return b.build();
}

Subdivision subdivide_with_paths(const Graph& g, const std::map<Edge, int>& counts) {
  for (const auto& [e, c] : counts) {
    if (!g.adjacent(e.u, e.v)) {
      throw Error(ErrorKind::kUnknownEdge, std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    require(c >= 0, "subdivision counts must be non-negative");
  }
  Subdivision out;
  GraphBuilder b;
  for (VertexId v : g.vertices()) b.add_vertex(v);
  for (const auto& [v, l] : g.labels()) b.set_label(v, l);
  VertexId next = g.max_vertex_id() + 1;
  for (const Edge& e : g.edges()) {
    auto it = counts.find(e);
    int c = it == counts.end() ? 0 : it->second;
    std::vector<VertexId> path{e.u};
    for (int k = 0; k < c; ++k) path.push_back(next++);
    path.push_back(e.v);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) b.add_edge(path[k], path[k + 1]);
    out.paths.emplace(e, std::move(path));
  }
  out.graph = b.build();
  return out;
}

Graph subdivide(const Graph& g, const std::map<Edge, int>& counts) {
  return subdivide_with_paths(g, counts).graph;
}

}  // namespace chordal
