#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "chordal/decomposition.hpp"
#include "chordal/drawing.hpp"
#include "chordal/graph.hpp"
#include "chordal/minor.hpp"

namespace chordal {

using Json = nlohmann::ordered_json;
using Drawing = std::variant<CircularDrawing, StraightLineDrawing>;

// All *_from_json functions throw Error(kParseError) on malformed input.

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

/// {"graph": ..., "order": [...], "anchors": {"id": "p/q"}}
Json to_json(const CircularDrawing& d);
/// {"graph": ..., "coords": {"id": ["p/q", "p/q"]}, "linear": bool}
Json to_json(const StraightLineDrawing& d);
Json to_json(const Drawing& d);
Drawing drawing_from_json(const Json& j);

/// {"tree_edges": [[a, b], ...], "bags": {"node": [vertex ids]}}
Json to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const Json& j);

/// {"model": {"h-vertex": [g-vertices]}}
Json to_json(const MinorCertificate& c);
MinorCertificate minor_certificate_from_json(const Json& j);

/// {"branch_vertices": {"h": g}, "paths": [{"edge": [a, b], "path": [...]}]}
Json to_json(const TopologicalMinorCertificate& c);
TopologicalMinorCertificate topological_certificate_from_json(const Json& j);

/// Throws Error(kIoError) if the file cannot be read or written.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

void export_json(const Drawing& d, const std::filesystem::path& path);
Drawing import_drawing(const std::filesystem::path& path);

/// GraphViz DOT, vertices labelled by id (or label when present).
std::string to_dot(const Graph& g);

}  // namespace chordal
