#include "chordal/hadwiger.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

#include "chordal/error.hpp"

namespace chordal {
namespace {

constexpr int kMaxVertices = 32;

struct State {
  std::uint32_t alive = 0;
  std::array<std::uint32_t, kMaxVertices> adj{};
  // original vertices merged into each representative
  std::array<std::uint32_t, kMaxVertices> branch{};

  int degree(int v) const { return std::popcount(adj[static_cast<std::size_t>(v)] & alive); }
  void remove(int v) {
    alive &= ~(1U << v);
    for (std::uint32_t r = adj[static_cast<std::size_t>(v)]; r; r &= r - 1) {
      adj[static_cast<std::size_t>(std::countr_zero(r))] &= ~(1U << v);
    }
    adj[static_cast<std::size_t>(v)] = 0;
  }
  // merge v into u
  void contract(int v, int u) {
    std::uint32_t nv = adj[static_cast<std::size_t>(v)] & ~(1U << u);
    branch[static_cast<std::size_t>(u)] |= branch[static_cast<std::size_t>(v)];
    remove(v);
    adj[static_cast<std::size_t>(u)] |= nv;
    for (std::uint32_t r = nv; r; r &= r - 1) adj[static_cast<std::size_t>(std::countr_zero(r))] |= 1U << u;
  }
  void delete_edge(int a, int b) {
    adj[static_cast<std::size_t>(a)] &= ~(1U << b);
    adj[static_cast<std::size_t>(b)] &= ~(1U << a);
  }
  int edge_count() const {
    int m = 0;
    for (std::uint32_t r = alive; r; r &= r - 1) m += degree(std::countr_zero(r));
    return m / 2;
  }
  std::string key() const {
    std::string k;
    k.reserve(4 * (std::popcount(alive) + 1));
    auto put = [&](std::uint32_t x) { k.append(reinterpret_cast<const char*>(&x), sizeof x); };
    put(alive);
    for (std::uint32_t r = alive; r; r &= r - 1) put(adj[static_cast<std::size_t>(std::countr_zero(r))] & alive);
    return k;
  }
};

std::uint32_t component_of(const State& s, int v) {
  std::uint32_t comp = 0;
  std::uint32_t frontier = 1U << v;
  while (frontier) {
    comp |= frontier;
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= s.adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & s.alive & ~comp;
  }
  return comp;
}

bool find_clique(const State& s, std::uint32_t candidates, int need, std::vector<int>& chosen) {
  if (need == 0) return true;
  while (candidates && std::popcount(candidates) >= need) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    chosen.push_back(v);
    if (find_clique(s, candidates & s.adj[static_cast<std::size_t>(v)], need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

class CliqueMinorSearch {
 public:
  explicit CliqueMinorSearch(int t) : t_(t) {}

  bool run(State s) {
    reduce(s);
    if (std::popcount(s.alive) < t_) return false;
    const int pairs = t_ * (t_ - 1) / 2;
    if (s.edge_count() < pairs) return false;
    std::vector<int> clique;
    if (find_clique(s, s.alive, t_, clique)) {
      for (int v : clique) model_.push_back(s.branch[static_cast<std::size_t>(v)]);
      return true;
    }
    std::string key = s.key();
    if (failed_.count(key)) return false;

    std::uint32_t comp = component_of(s, std::countr_zero(s.alive));
    if (comp != s.alive) {
      for (std::uint32_t rest = s.alive; rest;) {
        std::uint32_t c = component_of(s, std::countr_zero(rest));
        rest &= ~c;
        State part = s;
        part.alive = c;
        if (run(part)) return true;
      }
      failed_.insert(std::move(key));
      return false;
    }

    int v = -1;
    int dv = kMaxVertices + 1;
    for (std::uint32_t r = s.alive; r; r &= r - 1) {
      int x = std::countr_zero(r);
      int d = s.degree(x);
      if (d < dv) {
        dv = d;
        v = x;
      }
    }
    std::uint32_t nv = s.adj[static_cast<std::size_t>(v)] & s.alive;
    if (dv < t_ - 1) {
      // v cannot be a branch set on its own; it joins a neighbour's
      for (std::uint32_t r = nv; r; r &= r - 1) {
        State next = s;
        next.contract(v, std::countr_zero(r));
        if (run(next)) return true;
      }
    } else {
      int u = -1;
      int du = kMaxVertices + 1;
      for (std::uint32_t r = nv; r; r &= r - 1) {
        int x = std::countr_zero(r);
        int d = s.degree(x);
        if (d < du) {
          du = d;
          u = x;
        }
      }
      State contracted = s;
      contracted.contract(v, u);
      if (run(contracted)) return true;
      State deleted = s;
      deleted.delete_edge(v, u);
      if (run(deleted)) return true;
    }
    failed_.insert(std::move(key));
    return false;
  }

  const std::vector<std::uint32_t>& model() const { return model_; }

 private:
  void reduce(State& s) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t r = s.alive; r; r &= r - 1) {
        int v = std::countr_zero(r);
        if (!(s.alive >> v & 1U)) continue;
        std::uint32_t nv = s.adj[static_cast<std::size_t>(v)] & s.alive;
        int d = std::popcount(nv);
        if (d <= 1) {
          s.remove(v);
          changed = true;
        } else if (d == 2) {
          int a = std::countr_zero(nv);
          int b = std::countr_zero(nv & (nv - 1));
          bool joined = s.adj[static_cast<std::size_t>(a)] >> b & 1U;
          if (t_ >= 4 || !joined) {
            s.contract(v, a);
            changed = true;
          }
        }
      }
    }
  }

  int t_;
  std::vector<std::uint32_t> model_;
  std::unordered_set<std::string> failed_;
};

}  // namespace

std::optional<MinorCertificate> find_clique_minor(const Graph& g, int t, int cap) {
  const int n = g.num_vertices();
  if (n > cap || n > kMaxVertices) {
    throw Error(ErrorKind::kTooLargeInstance,
                "hadwiger search: " + std::to_string(n) + " vertices exceeds cap " + std::to_string(cap));
  }
  if (t < 0) throw Error(ErrorKind::kInvalidParameter, "negative clique size");
  MinorCertificate cert;
  if (t == 0) return cert;
  auto ids = g.vertices();
  if (t == 1) {
    if (n == 0) return std::nullopt;
    cert.model[0] = {ids[0]};
    return cert;
  }
  if (t == 2) {
    if (g.num_edges() == 0) return std::nullopt;
    cert.model[0] = {g.edges()[0].u};
    cert.model[1] = {g.edges()[0].v};
    return cert;
  }
  State s;
  for (int i = 0; i < n; ++i) {
    s.alive |= 1U << i;
    s.branch[static_cast<std::size_t>(i)] = 1U << i;
  }
  for (const Edge& e : g.edges()) {
    int a = g.index_of(e.u);
    int b = g.index_of(e.v);
    s.adj[static_cast<std::size_t>(a)] |= 1U << b;
    s.adj[static_cast<std::size_t>(b)] |= 1U << a;
  }
  CliqueMinorSearch search(t);
  if (!search.run(s)) return std::nullopt;
  int x = 0;
  for (std::uint32_t set : search.model()) {
    auto& out = cert.model[x++];
    for (std::uint32_t r = set; r; r &= r - 1) out.push_back(ids[static_cast<std::size_t>(std::countr_zero(r))]);
  }
  return cert;
}

HadwigerResult hadwiger_exact(const Graph& g, int cap) {
  HadwigerResult best;
  for (int t = 1; t <= g.num_vertices(); ++t) {
    auto cert = find_clique_minor(g, t, cap);
    if (!cert) break;
    best.value = t;
    best.certificate = std::move(*cert);
  }
  return best;
}

}  // namespace chordal
