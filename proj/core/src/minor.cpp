#include "chordal/minor.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "chordal/error.hpp"

namespace chordal {
namespace {

void check_id(const Graph& g, VertexId v, const char* which) {
  if (!g.has_vertex(v)) {
    throw Error(ErrorKind::kDanglingId, std::string(which) + " has no vertex " + std::to_string(v));
  }
}

}  // namespace

bool validate_minor_certificate(const Graph& g, const Graph& h, const MinorCertificate& cert) {
  std::map<VertexId, VertexId> owner;
  for (const auto& [x, set] : cert.model) {
    check_id(h, x, "pattern graph");
    for (VertexId v : set) check_id(g, v, "host graph");
  }
  for (VertexId x : h.vertices()) {
    auto it = cert.model.find(x);
    if (it == cert.model.end() || it->second.empty()) return false;
    for (VertexId v : it->second) {
      if (!owner.emplace(v, x).second) return false;
    }
    if (!g.induced(it->second).is_connected()) return false;
  }
  std::set<std::pair<VertexId, VertexId>> touching;
  for (const Edge& e : g.edges()) {
    auto a = owner.find(e.u);
    auto b = owner.find(e.v);
    if (a == owner.end() || b == owner.end() || a->second == b->second) continue;
    touching.emplace(std::min(a->second, b->second), std::max(a->second, b->second));
  }
  for (const Edge& f : h.edges()) {
    if (!touching.count({f.u, f.v})) return false;
  }
  return true;
}

bool validate_topological_minor_certificate(const Graph& g, const Graph& h,
                                            const TopologicalMinorCertificate& cert) {
  for (const auto& [x, v] : cert.branch_vertices) {
    check_id(h, x, "pattern graph");
    check_id(g, v, "host graph");
  }
  for (const auto& [e, path] : cert.paths) {
    check_id(h, e.u, "pattern graph");
    check_id(h, e.v, "pattern graph");
    for (VertexId v : path) check_id(g, v, "host graph");
  }
  std::set<VertexId> branch;
  for (VertexId x : h.vertices()) {
    auto it = cert.branch_vertices.find(x);
    if (it == cert.branch_vertices.end()) return false;
    if (!branch.insert(it->second).second) return false;
  }
  std::set<VertexId> used;
  for (const Edge& f : h.edges()) {
    auto it = cert.paths.find(f);
    if (it == cert.paths.end()) return false;
    const auto& path = it->second;
    if (path.size() < 2) return false;
    if (path.front() != cert.branch_vertices.at(f.u) || path.back() != cert.branch_vertices.at(f.v)) return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (!g.adjacent(path[i], path[i + 1])) return false;
    }
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (branch.count(path[i]) || !used.insert(path[i]).second) return false;
    }
  }
  return true;
}

}  // namespace chordal
