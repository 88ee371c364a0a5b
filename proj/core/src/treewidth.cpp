#include "chordal/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "bits.hpp"
#include "chordal/error.hpp"

namespace chordal {
namespace {

using detail::Bits;
using detail::BitsHash;

// Working graph on indices 0..n-1.
struct IndexGraph {
  int n = 0;
  std::vector<Bits> adj;
  Bits alive;

  explicit IndexGraph(const Graph& g) : n(g.num_vertices()), adj(static_cast<std::size_t>(n)) {
    for (const Edge& e : g.edges()) add_edge(g.index_of(e.u), g.index_of(e.v));
    for (int i = 0; i < n; ++i) alive.set(i);
  }

  void add_edge(int a, int b) {
    adj[static_cast<std::size_t>(a)].set(b);
    adj[static_cast<std::size_t>(b)].set(a);
  }
  const Bits& nb(int v) const { return adj[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return (nb(v) & alive).count(); }
  void remove(int v) {
    alive.reset(v);
    nb(v).for_each([&](int w) { adj[static_cast<std::size_t>(w)].reset(v); });
    adj[static_cast<std::size_t>(v)] = Bits{};
  }
  bool is_clique(const Bits& s) const {
    bool ok = true;
    s.for_each([&](int v) {
      if (ok) {
        Bits others = s;
        others.reset(v);
        ok = others.subset_of(nb(v));
      }
    });
    return ok;
  }
  void make_clique(const Bits& s) {
    s.for_each([&](int v) {
      s.for_each([&](int w) {
        if (v != w) adj[static_cast<std::size_t>(v)].set(w);
      });
    });
  }
  Bits neighbourhood(const Bits& set) const {
    Bits out;
    set.for_each([&](int v) { out |= nb(v); });
    return out.minus(set);
  }
  std::vector<Bits> components(const Bits& within) const {
    std::vector<Bits> out;
    Bits rest = within;
    while (rest.any()) {
      Bits comp;
      Bits frontier;
      frontier.set(rest.first());
      while (frontier.any()) {
        comp |= frontier;
        Bits next;
        frontier.for_each([&](int v) { next |= nb(v); });
        frontier = (next & rest).minus(comp);
      }
      rest = rest.minus(comp);
      out.push_back(comp);
    }
    return out;
  }
};

std::vector<VertexId> ids_of(const Graph& g, const Bits& s) {
  std::vector<VertexId> out;
  s.for_each([&](int i) { out.push_back(g.vertices()[static_cast<std::size_t>(i)]); });
  return out;
}

int minor_min_width(IndexGraph h) {
  int low = 0;
  while (h.alive.count() > 1) {
    int best = -1;
    int best_deg = std::numeric_limits<int>::max();
    h.alive.for_each([&](int v) {
      int d = h.degree(v);
      if (d < best_deg) {
        best_deg = d;
        best = v;
      }
    });
    low = std::max(low, best_deg);
    if (best_deg == 0) {
      h.remove(best);
      continue;
    }
    // contract into the neighbour sharing the fewest neighbours
    int partner = -1;
    int partner_common = std::numeric_limits<int>::max();
    h.nb(best).for_each([&](int u) {
      int common = (h.nb(u) & h.nb(best)).count();
      if (common < partner_common) {
        partner_common = common;
        partner = u;
      }
    });
    Bits merged = h.nb(best);
    merged.reset(partner);
    merged.for_each([&](int w) { h.add_edge(partner, w); });
    h.remove(best);
  }
  return low;
}

// Greedy min-fill ordering over the alive vertices of `h`.
std::vector<int> min_fill_order(IndexGraph h) {
  std::vector<int> order;
  while (h.alive.any()) {
    int best = -1;
    long best_fill = std::numeric_limits<long>::max();
    int best_deg = 0;
    h.alive.for_each([&](int v) {
      Bits nv = h.nb(v);
      long fill = 0;
      nv.for_each([&](int w) { fill += nv.minus(h.nb(w)).count() - 1; });
      fill /= 2;
      int d = nv.count();
      if (fill < best_fill || (fill == best_fill && d < best_deg)) {
        best_fill = fill;
        best_deg = d;
        best = v;
      }
    });
    h.make_clique(h.nb(best));
    h.remove(best);
    order.push_back(best);
  }
  return order;
}

// Decides tw <= k for the alive part of `h` via (component, separator) states.
class SeparatorSearch {
 public:
  SeparatorSearch(const IndexGraph& h, int k) : h_(h), k_(k) {}

  bool feasible(const Bits& c) {
    Bits s = h_.neighbourhood(c);
    int sc = s.count();
    if (sc > k_) return false;
    if (c.count() + sc <= k_ + 1) return true;
    if (auto it = memo_.find(c); it != memo_.end()) return it->second >= 0;
    std::vector<std::pair<int, int>> candidates;
    c.for_each([&](int v) { candidates.emplace_back(-(h_.nb(v) & s).count(), v); });
    std::sort(candidates.begin(), candidates.end());
    int choice = -1;
    for (const auto& [_, v] : candidates) {
      Bits rest = c;
      rest.reset(v);
      bool ok = true;
      for (const Bits& sub : h_.components(rest)) {
        if (!feasible(sub)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        choice = v;
        break;
      }
    }
    memo_[c] = choice;
    return choice >= 0;
  }

  // Appends nodes for component `c` below `parent` (-1 for a root).
  void build(const Bits& c, int parent, std::vector<Bits>& bags, std::vector<std::pair<int, int>>& edges) const {
    Bits s = h_.neighbourhood(c);
    int node = static_cast<int>(bags.size());
    if (parent >= 0) edges.emplace_back(parent, node);
    if (c.count() + s.count() <= k_ + 1) {
      bags.push_back(c | s);
      return;
    }
    int v = memo_.at(c);
    Bits bag = s;
    bag.set(v);
    bags.push_back(bag);
    Bits rest = c;
    rest.reset(v);
    for (const Bits& sub : h_.components(rest)) build(sub, node, bags, edges);
  }

 private:
  const IndexGraph& h_;
  int k_;
  std::unordered_map<Bits, int, BitsHash> memo_;
};

}  // namespace

TreewidthResult treewidth_exact(const Graph& g, int cap) {
  const int n = g.num_vertices();
  if (n > cap || n > 24) {
    throw Error(ErrorKind::kTooLargeInstance,
                "treewidth_exact: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  }
  if (n == 0) return {};
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const Edge& e : g.edges()) {
    int a = g.index_of(e.u);
    int b = g.index_of(e.v);
    adj[static_cast<std::size_t>(a)] |= 1U << b;
    adj[static_cast<std::size_t>(b)] |= 1U << a;
  }
  // vertices outside S reachable from v through S
  auto q = [&](std::uint32_t s, int v) {
    std::uint32_t reach = adj[static_cast<std::size_t>(v)];
    std::uint32_t comp = 0;
    std::uint32_t frontier = reach & s;
    while (frontier) {
      comp |= frontier;
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      reach |= next;
      frontier = next & s & ~comp;
    }
    return std::popcount(reach & ~s & ~(1U << v));
  };
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  std::vector<std::int8_t> tw(static_cast<std::size_t>(full) + 1, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    int best = n;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t without = s & ~(1U << v);
      int prev = tw[without];
      if (prev >= best) continue;
      best = std::min(best, std::max(prev, q(without, v)));
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::uint32_t s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      std::uint32_t without = s & ~(1U << v);
      if (std::max<int>(tw[without], q(without, v)) == tw[s]) {
        order[static_cast<std::size_t>(pos)] = g.vertices()[static_cast<std::size_t>(v)];
        s = without;
        break;
      }
    }
  }
  TreewidthResult out;
  out.width = tw[full];
  out.decomposition = decomposition_from_ordering(g, order);
  return out;
}

int treewidth_lower_bound(const Graph& g) {
  if (g.empty()) return -1;
  if (g.num_vertices() > detail::Bits::kCapacity) {
    throw Error(ErrorKind::kTooLargeInstance, "lower bound supports at most 256 vertices");
  }
  return minor_min_width(IndexGraph(g));
}

TreewidthResult treewidth_min_fill(const Graph& g) {
  if (g.empty()) return {};
  if (g.num_vertices() > detail::Bits::kCapacity) {
    throw Error(ErrorKind::kTooLargeInstance, "min-fill supports at most 256 vertices");
  }
  std::vector<VertexId> order;
  for (int i : min_fill_order(IndexGraph(g))) order.push_back(g.vertices()[static_cast<std::size_t>(i)]);
  TreewidthResult out;
  out.decomposition = decomposition_from_ordering(g, order);
  out.width = out.decomposition.width();
  return out;
}

TreewidthResult treewidth_sparse_exact(const Graph& g) {
  const int n = g.num_vertices();
  if (n > detail::Bits::kCapacity) {
    throw Error(ErrorKind::kTooLargeInstance, "treewidth_sparse_exact: more than 256 vertices");
  }
  if (n == 0) return {};
  IndexGraph h(g);
  int low = 0;
  struct Removed {
    int v;
    Bits nb;
  };
  std::vector<Removed> removed;
  auto reduce = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < n; ++v) {
        if (!h.alive.test(v)) continue;
        Bits nv = h.nb(v);
        int d = nv.count();
        bool simplicial = h.is_clique(nv);
        bool almost = false;
        if (!simplicial && d <= low) {
          nv.for_each([&](int u) {
            if (!almost) {
              Bits others = nv;
              others.reset(u);
              almost = h.is_clique(others);
            }
          });
        }
        if (simplicial || almost) {
          if (simplicial) low = std::max(low, d);
          h.make_clique(nv);
          removed.push_back({v, nv});
          h.remove(v);
          changed = true;
        }
      }
    }
  };
  reduce();
  if (h.alive.any()) {
    low = std::max(low, minor_min_width(h));
    reduce();
  }

  std::vector<Bits> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int width = low;
  if (h.alive.any()) {
    std::vector<int> fill_order = min_fill_order(h);
    // upper bound from min-fill on the reduced graph
    int upper = 0;
    {
      IndexGraph f = h;
      for (int v : fill_order) {
        upper = std::max(upper, f.nb(v).count());
        f.make_clique(f.nb(v));
        f.remove(v);
      }
    }
    auto comps = h.components(h.alive);
    for (int k = low; k <= upper; ++k) {
      SeparatorSearch search(h, k);
      bool ok = true;
      for (const Bits& c : comps) {
        if (!search.feasible(c)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        width = std::max(width, k);
        int previous_root = -1;
        for (const Bits& c : comps) {
          int root = static_cast<int>(bags.size());
          search.build(c, -1, bags, tree_edges);
          if (previous_root >= 0) tree_edges.emplace_back(previous_root, root);
          previous_root = root;
        }
        break;
      }
    }
  }
  // reinsert reduced vertices; their neighbourhoods are cliques of the current graph
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    Bits bag = it->nb;
    bag.set(it->v);
    int host = -1;
    if (it->nb.any()) {
      for (std::size_t x = 0; x < bags.size(); ++x) {
        if (it->nb.subset_of(bags[x])) {
          host = static_cast<int>(x);
          break;
        }
      }
      if (host < 0) throw Error(ErrorKind::kInternalContractViolation, "reduction left no host bag");
    } else if (!bags.empty()) {
      host = 0;
    }
    int node = static_cast<int>(bags.size());
    bags.push_back(bag);
    if (host >= 0) tree_edges.emplace_back(host, node);
  }
  TreewidthResult out;
  std::vector<Edge> te;
  for (const auto& [a, b] : tree_edges) te.emplace_back(a, b);
  out.decomposition.tree = Graph::on_range(static_cast<int>(bags.size()), std::move(te));
  for (std::size_t x = 0; x < bags.size(); ++x) out.decomposition.bags[static_cast<int>(x)] = ids_of(g, bags[x]);
  out.width = out.decomposition.width();
  if (out.width != width) {
    throw Error(ErrorKind::kInternalContractViolation, "sparse treewidth witness width mismatch");
  }
  return out;
}

TreewidthResult treewidth_auto(const Graph& g, int dp_cap) {
  if (g.num_vertices() <= std::min(dp_cap, 20)) return treewidth_exact(g, dp_cap);
  return treewidth_sparse_exact(g);
}

}  // namespace chordal
