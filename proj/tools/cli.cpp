#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "chordal/algorithms.hpp"
#include "chordal/caps.hpp"
#include "chordal/error.hpp"
#include "chordal/extremal.hpp"
#include "chordal/generators.hpp"
#include "chordal/serialize.hpp"
#include "chordal/suites.hpp"
#include "chordal/svg.hpp"
#include "chordal/transforms.hpp"

namespace chordal::cli {
namespace {

namespace fs = std::filesystem;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::string caps;
  bool force = false;
  bool timing = false;
  std::string out;
};

Caps resolve_caps(const Common& c) { return parse_caps(c.caps, caps_from_env()); }

void emit(std::ostream& out, const std::string& path, const Json& j) {
  if (!path.empty()) write_json_file(path, j);
  out << j.dump(2) << "\n";
}

long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
}

// "path:4" or "random_tree:6,3"
Graph parse_tree(const std::string& text, std::uint64_t seed) {
  auto colon = text.find(':');
  std::string family = text.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string::npos) {
    std::stringstream s(text.substr(colon + 1));
    std::string item;
    while (std::getline(s, item, ',')) {
      try {
        params.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw Error(ErrorKind::kInvalidParameter, "bad tree parameter '" + item + "'");
      }
    }
  }
  auto f = parse_family(family);
  if (!f) throw Error(ErrorKind::kInvalidParameter, "unknown graph family '" + family + "'");
  return generate(*f, params, seed);
}

struct GenerateArgs {
  std::string construction;
  std::vector<int> params;
  std::string tree;
  std::uint64_t seed = 0;
  int max_vertices = 9;
  int max_edges = 14;
  std::string out_dir = ".";
  bool no_svg = false;
};

int param(const GenerateArgs& a, std::size_t i, const char* what) {
  if (i >= a.params.size()) {
    throw Error(ErrorKind::kInvalidParameter, a.construction + " needs parameter " + what);
  }
  return a.params[i];
}

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> kNames{"grid_row", "two_degenerate_expander", "ktt", "tree_plus_dominant",
                                               "product", "star_forest", "nested_polygon", "random"};
  return kNames;
}

LabeledConstruction build(const GenerateArgs& a) {
  const std::string& c = a.construction;
  if (c == "grid_row") return grid_row_drawing(param(a, 0, "n"));
  if (c == "two_degenerate_expander") return two_degenerate_expander(param(a, 0, "t"));
  if (c == "ktt") return ktt_chord_diagram(param(a, 0, "t"));
  if (c == "star_forest") return star_forest_construction(param(a, 0, "t"));
  if (c == "nested_polygon") return nested_polygon_drawing(param(a, 0, "layers"), param(a, 1, "m"));
  if (c == "tree_plus_dominant" || c == "product") {
    if (a.tree.empty()) throw Error(ErrorKind::kInvalidParameter, c + " needs --tree");
    Graph tree = parse_tree(a.tree, a.seed);
    return c == "product" ? product_drawing(tree, param(a, 0, "m")) : tree_plus_dominant(tree);
  }
  if (c == "random") {
    std::mt19937_64 rng(a.seed);
    LabeledConstruction out;
    out.name = "random";
    out.drawing = random_circular_drawing(rng, a.max_vertices, a.max_edges);
    out.notes.push_back("seed " + std::to_string(a.seed));
    return out;
  }
  throw Error(ErrorKind::kInvalidParameter, "unknown construction '" + c + "'");
}

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  LabeledConstruction c = build(a);
  std::string stem = a.construction;
  for (int p : a.params) stem += "-" + std::to_string(p);
  if (a.construction == "random") stem += "-seed" + std::to_string(a.seed);
  fs::path dir(a.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::kIoError, "cannot create " + dir.string() + ": " + ec.message());
  fs::path drawing = dir / (stem + ".drawing.json");
  fs::path witnesses = dir / (stem + ".witnesses.json");
  export_json(c.drawing, drawing);
  write_json_file(witnesses, witnesses_json(c));
  out << drawing.string() << "\n" << witnesses.string() << "\n";
  if (!a.no_svg) {
    fs::path svg = dir / (stem + ".svg");
    export_svg(c.drawing, svg);
    out << svg.string() << "\n";
  }
  return kPass;
}

Json drawing_summary(const Drawing& d) {
  const Graph& g = std::visit([](const auto& x) -> const Graph& { return x.graph(); }, d);
  Graph x = std::visit([](const auto& dr) { return crossing_graph(dr).graph; }, d);
  std::string kind = "circular";
  if (const auto* s = std::get_if<StraightLineDrawing>(&d)) kind = s->linear() ? "linear" : "straight_line";
  return Json{{"kind", kind},
              {"vertices", g.num_vertices()},
              {"edges", g.num_edges()},
              {"crossings", x.num_edges()},
              {"max_degree", g.max_degree()},
              {"crossing_graph_degeneracy", degeneracy(x).value}};
}

int cmd_analyze(const std::string& path, const Common& common, bool no_chain, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  Drawing d = import_drawing(path);
  BoundsOptions opt{resolve_caps(common), common.force, !no_chain};
  WidthBounds b = std::visit([&](const auto& dr) { return check_width_bounds(dr, opt); }, d);
  Json j{{"drawing", drawing_summary(d)}};
  Json inv = to_json(b);
  Json checks = inv["checks"];
  inv.erase("checks");
  j["invariants"] = inv;
  j["checks"] = checks;
  j["pass"] = b.report.ok();
  if (common.timing) j["wall_time_ms"] = elapsed_ms(start);
  emit(out, common.out, j);
  return b.report.ok() ? kPass : kFail;
}

struct VerifyArgs {
  std::string suite;
  SuiteOptions options;
  std::vector<int> t, k, n, m;
  bool no_chain = false;
};

int cmd_verify(VerifyArgs& a, const Common& common, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  SuiteOptions& o = a.options;
  for (const auto* list : {&a.t, &a.k, &a.n}) o.params.insert(o.params.end(), list->begin(), list->end());
  o.params2 = a.m;
  o.caps = resolve_caps(common);
  o.force = common.force;
  o.minor_chain = !a.no_chain;
  VerificationReport r = run_suite(a.suite, o);
  if (common.timing) r.wall_time_ms = elapsed_ms(start);
  emit(out, common.out, to_json(r));
  return r.ok() ? kPass : kFail;
}

void add_common(CLI::App* sub, Common& c, bool with_out) {
  sub->add_option("--caps", c.caps, "Solver caps, e.g. treewidth=20,hadwiger=15 (on top of CHORDAL_CAPS)");
  sub->add_flag("--force", c.force, "Report exact claims above the caps as skipped instead of failing");
  sub->add_flag("--timing", c.timing, "Add wall_time_ms to the report");
  if (with_out) sub->add_option("--out", c.out, "Also write the JSON report to this file");
}

std::string joined(const std::vector<std::string>& names) {
  std::string s;
  for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circular drawings, crossing graphs and width bounds"};
  app.name("chordal");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a construction as drawing JSON, witnesses JSON and SVG");
  generate->add_option("construction", gen.construction, "One of: " + joined(construction_names()))->required();
  generate->add_option("params", gen.params, "Integer parameters of the construction");
  generate->add_option("--tree", gen.tree, "Tree for tree_plus_dominant/product, e.g. path:4, random_tree:6,3");
  generate->add_option("--seed", gen.seed, "Seed for random constructions");
  generate->add_option("--max-vertices", gen.max_vertices, "Vertex bound for 'random'");
  generate->add_option("--max-edges", gen.max_edges, "Edge bound for 'random'");
  generate->add_option("--out", gen.out_dir, "Output directory");
  generate->add_flag("--no-svg", gen.no_svg, "Skip the SVG file");

  std::string analyze_path;
  Common analyze_common;
  bool analyze_no_chain = false;
  auto* analyze = app.add_subcommand("analyze", "Exact invariants and width/radius inequalities of a drawing");
  analyze->add_option("drawing", analyze_path, "Drawing JSON file")->required();
  analyze->add_flag("--no-minor-chain", analyze_no_chain, "Skip the Hadwiger/Hajos chains");
  add_common(analyze, analyze_common, true);

  VerifyArgs ver;
  Common verify_common;
  auto* verify = app.add_subcommand("verify", "Run a verification suite; exit code 1 on any failure");
  verify->add_option("suite", ver.suite, "One of: " + joined(suite_names()))->required();
  verify->add_option("--seeds", ver.options.seeds, "Number of random drawings");
  verify->add_option("--seed", ver.options.seed, "Base seed");
  verify->add_option("--max-vertices", ver.options.max_vertices, "Vertex bound of random drawings");
  verify->add_option("--max-edges", ver.options.max_edges, "Edge bound of random drawings");
  verify->add_option("--t", ver.t, "t values");
  verify->add_option("--k", ver.k, "k values");
  verify->add_option("--n", ver.n, "n values (largest tree size for 'product')");
  verify->add_option("--m", ver.m, "m values for 'product'");
  verify->add_option("--max-division", ver.options.max_division, "Division vertices for 'k2n-subdivisions'");
  verify->add_option("--jobs", ver.options.jobs, "Worker threads across instances")->check(CLI::PositiveNumber);
  verify->add_flag("--no-minor-chain", ver.no_chain, "Skip the Hadwiger/Hajos chains in 'width-bounds'");
  add_common(verify, verify_common, true);

  std::string svg_in;
  std::string svg_out;
  auto* svg = app.add_subcommand("export-svg", "Render a drawing JSON file as SVG");
  svg->add_option("drawing", svg_in, "Drawing JSON file")->required();
  svg->add_option("svg", svg_out, "Output SVG file")->required();

  std::vector<const char*> argv{"chordal"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*analyze) return cmd_analyze(analyze_path, analyze_common, analyze_no_chain, out);
    if (*verify) return cmd_verify(ver, verify_common, out);
    if (*svg) {
      export_svg(import_drawing(svg_in), svg_out);
      out << svg_out << "\n";
      return kPass;
    }
  } catch (const Error& e) {
    err << "chordal: " << e.what() << "\n";
    return e.kind() == ErrorKind::kInternalContractViolation ? kFail : kUsage;
  }
  return kUsage;
}

}  // namespace chordal::cli
