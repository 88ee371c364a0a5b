#include "chordal/graph.hpp"

#include <algorithm>
#include <queue>

#include "chordal/error.hpp"

namespace chordal {

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges,
             std::map<VertexId, std::string> labels)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), labels_(std::move(labels)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw Error(ErrorKind::kInvalidGraph, "duplicate vertex id");
  }
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw Error(ErrorKind::kInvalidGraph, "self-loop at " + std::to_string(e.u));
    if (!std::binary_search(vertices_.begin(), vertices_.end(), e.u) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), e.v)) {
      throw Error(ErrorKind::kInvalidGraph,
                  "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has a missing endpoint");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error(ErrorKind::kInvalidGraph, "parallel edge");
  }
  for (const auto& [v, _] : labels_) {
    if (!std::binary_search(vertices_.begin(), vertices_.end(), v)) {
      throw Error(ErrorKind::kInvalidGraph, "label for missing vertex " + std::to_string(v));
    }
  }
  adjacency_.resize(vertices_.size());
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(index_of(e.u))].push_back(e.v);
    adjacency_[static_cast<std::size_t>(index_of(e.v))].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph Graph::on_range(int n, std::vector<Edge> edges) {
  std::vector<VertexId> vs(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
  return Graph(std::move(vs), std::move(edges));
}

int Graph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<EdgeId> Graph::edge_id(VertexId a, VertexId b) const {
  if (a == b) return std::nullopt;
  Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::span<const VertexId> Graph::neighbours(VertexId v) const {
  int i = index_of(v);
  if (i < 0) throw Error(ErrorKind::kDanglingId, "unknown vertex " + std::to_string(v));
  return adjacency_[static_cast<std::size_t>(i)];
}

int Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

std::vector<EdgeId> Graph::incident_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (VertexId w : neighbours(v)) out.push_back(*edge_id(v, w));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> Graph::label(VertexId v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  std::vector<VertexId> vs(keep.begin(), keep.end());
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (VertexId v : vs) {
    if (!has_vertex(v)) throw Error(ErrorKind::kDanglingId, "unknown vertex " + std::to_string(v));
  }
  std::vector<Edge> es;
  for (const Edge& e : edges_) {
    if (std::binary_search(vs.begin(), vs.end(), e.u) && std::binary_search(vs.begin(), vs.end(), e.v)) {
      es.push_back(e);
    }
  }
  std::map<VertexId, std::string> ls;
  for (const auto& [v, l] : labels_) {
    if (std::binary_search(vs.begin(), vs.end(), v)) ls.emplace(v, l);
  }
  return Graph(std::move(vs), std::move(es), std::move(ls));
}

Graph Graph::without_vertices(std::span<const VertexId> drop) const {
  std::vector<VertexId> d(drop.begin(), drop.end());
  std::sort(d.begin(), d.end());
  std::vector<VertexId> keep;
  for (VertexId v : vertices_) {
    if (!std::binary_search(d.begin(), d.end(), v)) keep.push_back(v);
  }
  return induced(keep);
}

std::vector<std::vector<VertexId>> Graph::components() const {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(vertices_.size(), 0);
  for (std::size_t s = 0; s < vertices_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop();
      comp.push_back(vertices_[i]);
      for (VertexId w : adjacency_[i]) {
        auto j = static_cast<std::size_t>(index_of(w));
        if (!seen[j]) {
          seen[j] = 1;
          q.push(j);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

bool Graph::is_tree() const {
  return !vertices_.empty() && num_edges() == num_vertices() - 1 && is_connected();
}

GraphBuilder& GraphBuilder::add_vertex(VertexId v) {
  vertices_.push_back(v);
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(VertexId a, VertexId b) {
  if (a == b) throw Error(ErrorKind::kInvalidGraph, "self-loop at " + std::to_string(a));
  vertices_.push_back(a);
  vertices_.push_back(b);
  edges_.emplace_back(a, b);
  return *this;
}

GraphBuilder& GraphBuilder::set_label(VertexId v, std::string label) {
  vertices_.push_back(v);
  labels_[v] = std::move(label);
  return *this;
}

bool GraphBuilder::has_vertex(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

Graph GraphBuilder::build() const {
  std::vector<VertexId> vs = vertices_;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<Edge> es = edges_;
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(std::move(vs), std::move(es), labels_);
}

}  // namespace chordal
