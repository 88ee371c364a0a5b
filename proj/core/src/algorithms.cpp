#include "chordal/algorithms.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "chordal/error.hpp"

namespace chordal {

std::map<VertexId, int> bfs_distances(const Graph& g, const std::vector<VertexId>& sources) {
  std::map<VertexId, int> dist;
  std::deque<VertexId> q;
  for (VertexId s : sources) {
    if (!g.has_vertex(s)) throw Error(ErrorKind::kDanglingId, "unknown vertex " + std::to_string(s));
    if (dist.emplace(s, 0).second) q.push_back(s);
  }
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop_front();
    int d = dist[v];
    for (VertexId w : g.neighbours(v)) {
      if (dist.emplace(w, d + 1).second) q.push_back(w);
    }
  }
  return dist;
}

std::map<VertexId, int> bfs_distances(const Graph& g, VertexId source) {
  return bfs_distances(g, std::vector<VertexId>{source});
}

int eccentricity(const Graph& g, VertexId v) {
  auto dist = bfs_distances(g, v);
  if (static_cast<int>(dist.size()) != g.num_vertices()) {
    throw Error(ErrorKind::kDisconnectedGraph, "graph is disconnected");
  }
  int ecc = 0;
  for (const auto& [_, d] : dist) ecc = std::max(ecc, d);
  return ecc;
}

int graph_radius(const Graph& g) {
  if (g.empty()) throw Error(ErrorKind::kInvalidParameter, "radius of the empty graph");
  int best = g.num_vertices();
  for (VertexId v : g.vertices()) best = std::min(best, eccentricity(g, v));
  return best;
}

Degeneracy degeneracy(const Graph& g) {
  Degeneracy out;
  std::map<VertexId, int> deg;
  std::set<std::pair<int, VertexId>> queue;
  for (VertexId v : g.vertices()) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::set<VertexId> removed;
  while (!queue.empty()) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    out.value = std::max(out.value, d);
    out.order.push_back(v);
    removed.insert(v);
    for (VertexId w : g.neighbours(v)) {
      if (removed.count(w)) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return out;
}

std::optional<BicliqueWitness> has_kst_subgraph(const Graph& g, int s, int t) {
  if (s < 1 || t < 1) throw Error(ErrorKind::kInvalidParameter, "biclique sides must be >= 1");
  const bool swapped = s > t;
  const int small = swapped ? t : s;
  const int large = swapped ? s : t;
  auto verts = g.vertices();
  std::vector<VertexId> chosen;
  std::optional<BicliqueWitness> found;
  // candidates: common neighbours of `chosen` so far
  std::function<void(std::size_t, std::vector<VertexId>)> extend = [&](std::size_t from,
                                                                      std::vector<VertexId> common) {
    if (found) return;
    if (static_cast<int>(chosen.size()) == small) {
      std::vector<VertexId> other;
      for (VertexId w : common) {
        if (!std::binary_search(chosen.begin(), chosen.end(), w)) other.push_back(w);
      }
      if (static_cast<int>(other.size()) >= large) {
        other.resize(static_cast<std::size_t>(large));
        found = swapped ? BicliqueWitness{other, chosen} : BicliqueWitness{chosen, other};
      }
      return;
    }
    for (std::size_t i = from; i < verts.size() && !found; ++i) {
      VertexId v = verts[i];
      if (g.degree(v) < large) continue;
      std::vector<VertexId> next;
      auto nb = g.neighbours(v);
      if (chosen.empty()) {
        next.assign(nb.begin(), nb.end());
      } else {
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
      }
      if (static_cast<int>(next.size()) < large) continue;
      chosen.push_back(v);
      extend(i + 1, std::move(next));
      chosen.pop_back();
    }
  };
  extend(0, {});
  return found;
}

std::vector<VertexId> maximum_clique(const Graph& g) {
  std::vector<VertexId> best;
  std::vector<VertexId> current;
  std::function<void(std::vector<VertexId>)> grow = [&](std::vector<VertexId> candidates) {
    if (candidates.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    while (!candidates.empty()) {
      if (current.size() + candidates.size() <= best.size()) return;
      VertexId v = candidates.front();
      candidates.erase(candidates.begin());
      std::vector<VertexId> next;
      auto nb = g.neighbours(v);
      std::set_intersection(candidates.begin(), candidates.end(), nb.begin(), nb.end(), std::back_inserter(next));
      current.push_back(v);
      grow(std::move(next));
      current.pop_back();
    }
  };
  grow(std::vector<VertexId>(g.vertices().begin(), g.vertices().end()));
  return best;
}

}  // namespace chordal
