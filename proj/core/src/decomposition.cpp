#include "chordal/decomposition.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chordal/error.hpp"

namespace chordal {
namespace {

std::string edge_name(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

void fail(const std::string& what) { throw Error(ErrorKind::kViolatedAxiom, what); }

}  // namespace

int TreeDecomposition::width() const {
  std::size_t best = 0;
  for (const auto& [_, b] : bags) best = std::max(best, b.size());
  return static_cast<int>(best) - 1;
}

int validate_decomposition(const Graph& g, const TreeDecomposition& td) {
  if (td.tree.empty()) {
    if (!g.empty()) fail("empty tree for a nonempty graph");
    return -1;
  }
  if (!td.tree.is_tree()) fail("decomposition tree is not a tree");
  for (VertexId x : td.tree.vertices()) {
    if (!td.bags.count(x)) fail("node " + std::to_string(x) + " has no bag");
  }
  std::map<VertexId, std::vector<int>> holders;
  for (const auto& [x, bag] : td.bags) {
    if (!td.tree.has_vertex(x)) fail("bag for unknown node " + std::to_string(x));
    for (VertexId v : bag) {
      if (!g.has_vertex(v)) {
        fail("node " + std::to_string(x) + " holds unknown vertex " + std::to_string(v));
      }
      holders[v].push_back(x);
    }
  }
  for (VertexId v : g.vertices()) {
    if (!holders.count(v)) fail("vertex " + std::to_string(v) + " is in no bag");
  }
  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int x : holders[e.u]) {
      const auto& bag = td.bags.at(x);
      if (std::binary_search(bag.begin(), bag.end(), e.v)) {
        covered = true;
        break;
      }
    }
    if (!covered) fail("edge " + edge_name(e) + " is in no bag");
  }
  for (const auto& [v, nodes] : holders) {
    if (!td.tree.induced(nodes).is_connected()) {
      fail("nodes holding vertex " + std::to_string(v) + " are not connected");
    }
  }
  return td.width();
}

bool is_valid_decomposition(const Graph& g, const TreeDecomposition& td) {
  try {
    validate_decomposition(g, td);
    return true;
  } catch (const Error&) {
    return false;
  }
}

TreeDecomposition decomposition_from_ordering(const Graph& g, std::span<const VertexId> order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorKind::kInvalidParameter, "ordering does not cover the graph");
  }
  std::map<VertexId, int> pos;
  for (int i = 0; i < n; ++i) pos[order[static_cast<std::size_t>(i)]] = i;
  if (static_cast<int>(pos.size()) != n) throw Error(ErrorKind::kInvalidParameter, "repeated vertex in ordering");
  std::vector<std::set<int>> later(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    int a = pos.at(e.u);
    int b = pos.at(e.v);
    later[static_cast<std::size_t>(std::min(a, b))].insert(std::max(a, b));
  }
  TreeDecomposition td;
  std::vector<Edge> tree_edges;
  int previous_root = -1;
  for (int i = 0; i < n; ++i) {
    const auto& nb = later[static_cast<std::size_t>(i)];
    std::vector<VertexId> bag{order[static_cast<std::size_t>(i)]};
    for (int j : nb) bag.push_back(order[static_cast<std::size_t>(j)]);
    std::sort(bag.begin(), bag.end());
    td.bags[i] = std::move(bag);
    if (nb.empty()) {
      if (previous_root >= 0) tree_edges.emplace_back(previous_root, i);
      previous_root = i;
      continue;
    }
    int parent = *nb.begin();
    tree_edges.emplace_back(i, parent);
    for (int j : nb) {
      if (j != parent) later[static_cast<std::size_t>(parent)].insert(j);
    }
  }
  td.tree = Graph::on_range(n, std::move(tree_edges));
  return td;
}

TreeDecomposition path_decomposition(std::vector<std::vector<VertexId>> bags) {
  TreeDecomposition td;
  std::vector<Edge> edges;
  const int n = static_cast<int>(bags.size());
  for (int i = 0; i < n; ++i) {
    auto& b = bags[static_cast<std::size_t>(i)];
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    td.bags[i] = std::move(b);
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  td.tree = Graph::on_range(n, std::move(edges));
  return td;
}

}  // namespace chordal
