#include "chordal/topological.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "chordal/error.hpp"
#include "chordal/generators.hpp"

namespace chordal {
namespace {

constexpr int kMaxVertices = 32;

class SubdivisionSearch {
 public:
  SubdivisionSearch(const Graph& g, const Graph& h, bool symmetric)
      : g_(g), h_(h), symmetric_(symmetric), n_(g.num_vertices()), adj_(static_cast<std::size_t>(n_), 0) {
    for (const Edge& e : g.edges()) {
      int a = g.index_of(e.u);
      int b = g.index_of(e.v);
      adj_[static_cast<std::size_t>(a)] |= 1U << b;
      adj_[static_cast<std::size_t>(b)] |= 1U << a;
    }
    for (VertexId x : h.vertices()) pattern_.push_back(x);
    if (!symmetric_) {
      std::stable_sort(pattern_.begin(), pattern_.end(),
                       [&](VertexId a, VertexId b) { return h.degree(a) > h.degree(b); });
    }
    for (const Edge& f : h.edges()) pattern_edges_.push_back(f);
    image_.assign(static_cast<std::size_t>(h.max_vertex_id() + 1), -1);
  }

  bool run() { return assign(0, 0); }

  TopologicalMinorCertificate certificate() const {
    TopologicalMinorCertificate cert;
    auto ids = g_.vertices();
    for (VertexId x : h_.vertices()) cert.branch_vertices[x] = ids[static_cast<std::size_t>(img(x))];
    for (std::size_t i = 0; i < pattern_edges_.size(); ++i) {
      std::vector<VertexId> path;
      for (int v : paths_[i]) path.push_back(ids[static_cast<std::size_t>(v)]);
      cert.paths[pattern_edges_[i]] = std::move(path);
    }
    return cert;
  }

 private:
  int img(VertexId x) const { return image_[static_cast<std::size_t>(x)]; }

  bool assign(std::size_t k, int from) {
    if (k == pattern_.size()) {
      paths_.assign(pattern_edges_.size(), {});
      std::uint32_t free = (n_ == 32 ? ~0U : (1U << n_) - 1) & ~branch_mask_;
      return route(0, free);
    }
    VertexId x = pattern_[k];
    int need = h_.degree(x);
    for (int v = symmetric_ ? from : 0; v < n_; ++v) {
      if (branch_mask_ >> v & 1U) continue;
      if (std::popcount(adj_[static_cast<std::size_t>(v)]) < need) continue;
      image_[static_cast<std::size_t>(x)] = v;
      branch_mask_ |= 1U << v;
      bool ok = assign(k + 1, v + 1);
      branch_mask_ &= ~(1U << v);
      if (ok) return true;
    }
    image_[static_cast<std::size_t>(x)] = -1;
    return false;
  }

  bool reachable(int a, int b, std::uint32_t free) const {
    std::uint32_t seen = 1U << a;
    std::uint32_t frontier = 1U << a;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      if (next >> b & 1U) return true;
      frontier = next & free & ~seen;
      seen |= frontier;
    }
    return false;
  }

  bool remaining_feasible(std::size_t from, std::uint32_t free) const {
    for (std::size_t i = from; i < pattern_edges_.size(); ++i) {
      if (!reachable(img(pattern_edges_[i].u), img(pattern_edges_[i].v), free)) return false;
    }
    return true;
  }

  bool route(std::size_t i, std::uint32_t free) {
    if (i == pattern_edges_.size()) return true;
    if (!remaining_feasible(i, free)) return false;
    int a = img(pattern_edges_[i].u);
    int b = img(pattern_edges_[i].v);
    std::vector<int> path{a};
    return extend(i, path, b, free);
  }

  bool extend(std::size_t i, std::vector<int>& path, int target, std::uint32_t free) {
    int last = path.back();
    std::uint32_t nb = adj_[static_cast<std::size_t>(last)];
    if (nb >> target & 1U) {
      path.push_back(target);
      paths_[i] = path;
      if (route(i + 1, free)) return true;
      path.pop_back();
    }
    for (std::uint32_t r = nb & free; r; r &= r - 1) {
      int w = std::countr_zero(r);
      path.push_back(w);
      if (extend(i, path, target, free & ~(1U << w))) return true;
      path.pop_back();
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  bool symmetric_;
  int n_;
  std::vector<std::uint32_t> adj_;
  std::vector<VertexId> pattern_;
  std::vector<Edge> pattern_edges_;
  std::vector<int> image_;
  std::uint32_t branch_mask_ = 0;
  std::vector<std::vector<int>> paths_;
};

std::optional<TopologicalMinorCertificate> search(const Graph& g, const Graph& h, int cap, bool symmetric) {
  const int n = g.num_vertices();
  if (n > cap || n > kMaxVertices) {
    throw Error(ErrorKind::kTooLargeInstance,
                "topological minor search: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  }
  if (h.num_vertices() > n || h.num_edges() > g.num_edges()) return std::nullopt;
  if (!h.empty() && h.vertices().front() < 0) throw Error(ErrorKind::kInvalidParameter, "negative pattern id");
  SubdivisionSearch s(g, h, symmetric);
  if (!s.run()) return std::nullopt;
  return s.certificate();
}

}  // namespace

std::optional<TopologicalMinorCertificate> find_topological_minor(const Graph& g, const Graph& h, int cap) {
  return search(g, h, cap, false);
}

HajosResult hajos_exact(const Graph& g, int cap) {
  HajosResult best;
  if (g.num_vertices() > cap) {
    throw Error(ErrorKind::kTooLargeInstance, "hajos_exact: " + std::to_string(g.num_vertices()) +
                                                  " vertices exceeds cap " + std::to_string(cap));
  }
  for (int t = 1; t <= g.num_vertices(); ++t) {
    auto cert = search(g, complete_graph(t), cap, true);
    if (!cert) break;
    best.value = t;
    best.certificate = std::move(*cert);
  }
  return best;
}

}  // namespace chordal
