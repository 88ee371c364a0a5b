#include "chordal/serialize.hpp"

#include <fstream>
#include <sstream>

#include "chordal/error.hpp"

namespace chordal {
namespace {

Error parse_error(const std::string& what) { return Error(ErrorKind::kParseError, what); }

int parse_id(const std::string& key) {
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != key.size()) throw parse_error("bad id '" + key + "'");
    return v;
  } catch (const std::logic_error&) {
    throw parse_error("bad id '" + key + "'");
  }
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw parse_error(e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw parse_error("rational must be a string or an integer");
}

}  // namespace

Json to_json(const Graph& g) {
  Json j;
  j["vertices"] = std::vector<int>(g.vertices().begin(), g.vertices().end());
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) {
    Json labels = Json::object();
    for (const auto& [v, l] : g.labels()) labels[std::to_string(v)] = l;
    j["labels"] = std::move(labels);
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  return guarded([&] {
    std::vector<VertexId> vs = j.at("vertices").get<std::vector<int>>();
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw parse_error("edge must be a pair");
      es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::map<VertexId, std::string> labels;
    if (j.contains("labels")) {
      for (const auto& [k, v] : j.at("labels").items()) labels[parse_id(k)] = v.get<std::string>();
    }
    try {
      return Graph(std::move(vs), std::move(es), std::move(labels));
    } catch (const Error& e) {
      throw parse_error(e.what());
    }
  });
}

Json to_json(const CircularDrawing& d) {
  Json j;
  j["graph"] = to_json(d.graph());
  j["order"] = d.order();
  Json anchors = Json::object();
  for (VertexId v : d.order()) anchors[std::to_string(v)] = to_string(d.anchor(v));
  j["anchors"] = std::move(anchors);
  return j;
}

Json to_json(const StraightLineDrawing& d) {
  Json j;
  j["graph"] = to_json(d.graph());
  Json coords = Json::object();
  for (const auto& [v, p] : d.coords()) coords[std::to_string(v)] = {to_string(p.x), to_string(p.y)};
  j["coords"] = std::move(coords);
  j["linear"] = d.linear();
  return j;
}

Json to_json(const Drawing& d) {
  return std::visit([](const auto& x) { return to_json(x); }, d);
}

Drawing drawing_from_json(const Json& j) {
  return guarded([&]() -> Drawing {
    Graph g = graph_from_json(j.at("graph"));
    if (j.contains("order")) {
      std::vector<VertexId> order = j.at("order").get<std::vector<int>>();
      std::map<VertexId, Rational> anchors;
      if (j.contains("anchors")) {
        for (const auto& [k, v] : j.at("anchors").items()) anchors[parse_id(k)] = rational_from_json(v);
        return CircularDrawing(std::move(g), std::move(order), std::move(anchors));
      }
      return make_circular(g, order);
    }
    std::map<VertexId, Point> coords;
    for (const auto& [k, v] : j.at("coords").items()) {
      if (!v.is_array() || v.size() != 2) throw parse_error("coordinate must be a pair");
      coords[parse_id(k)] = Point{rational_from_json(v[0]), rational_from_json(v[1])};
    }
    bool linear = j.value("linear", false);
    return StraightLineDrawing(std::move(g), std::move(coords), linear);
  });
}

Json to_json(const TreeDecomposition& td) {
  Json j;
  Json edges = Json::array();
  for (const Edge& e : td.tree.edges()) edges.push_back({e.u, e.v});
  j["tree_edges"] = std::move(edges);
  Json bags = Json::object();
  for (const auto& [x, bag] : td.bags) bags[std::to_string(x)] = bag;
  j["bags"] = std::move(bags);
  return j;
}

TreeDecomposition decomposition_from_json(const Json& j) {
  return guarded([&] {
    TreeDecomposition td;
    for (const auto& [k, v] : j.at("bags").items()) {
      auto bag = v.get<std::vector<int>>();
      std::sort(bag.begin(), bag.end());
      td.bags[parse_id(k)] = std::move(bag);
    }
    GraphBuilder b;
    for (const auto& [x, _] : td.bags) b.add_vertex(x);
    for (const auto& e : j.at("tree_edges")) {
      if (!e.is_array() || e.size() != 2) throw parse_error("tree edge must be a pair");
      b.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    td.tree = b.build();
    return td;
  });
}

Json to_json(const MinorCertificate& c) {
  Json model = Json::object();
  for (const auto& [x, set] : c.model) model[std::to_string(x)] = set;
  return Json{{"model", model}};
}

MinorCertificate minor_certificate_from_json(const Json& j) {
  return guarded([&] {
    MinorCertificate c;
    for (const auto& [k, v] : j.at("model").items()) c.model[parse_id(k)] = v.get<std::vector<int>>();
    return c;
  });
}

Json to_json(const TopologicalMinorCertificate& c) {
  Json branch = Json::object();
  for (const auto& [x, v] : c.branch_vertices) branch[std::to_string(x)] = v;
  Json paths = Json::array();
  for (const auto& [e, path] : c.paths) paths.push_back({{"edge", {e.u, e.v}}, {"path", path}});
  return Json{{"branch_vertices", branch}, {"paths", paths}};
}

TopologicalMinorCertificate topological_certificate_from_json(const Json& j) {
  return guarded([&] {
    TopologicalMinorCertificate c;
    for (const auto& [k, v] : j.at("branch_vertices").items()) c.branch_vertices[parse_id(k)] = v.get<int>();
    for (const auto& item : j.at("paths")) {
      const auto& e = item.at("edge");
      c.paths[Edge(e.at(0).get<int>(), e.at(1).get<int>())] = item.at("path").get<std::vector<int>>();
    }
    return c;
  });
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIoError, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw parse_error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::kIoError, "write failed for " + path.string());
}

void write_json_file(const std::filesystem::path& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

void export_json(const Drawing& d, const std::filesystem::path& path) { write_json_file(path, to_json(d)); }

Drawing import_drawing(const std::filesystem::path& path) { return drawing_from_json(read_json_file(path)); }

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v;
    if (auto l = g.label(v)) out << " [label=\"" << *l << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace chordal
