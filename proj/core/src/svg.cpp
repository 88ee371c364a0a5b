#include "chordal/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace chordal {
namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

struct Frame {
  double min_x, min_y, max_x, max_y;
  double scale;

  double sx(double x) const { return 20 + (x - min_x) * scale; }
  // SVG y grows downwards
  double sy(double y) const { return 20 + (max_y - y) * scale; }
  double width() const { return 40 + (max_x - min_x) * scale; }
  double height() const { return 40 + (max_y - min_y) * scale; }
};

void header(std::ostringstream& out, const Frame& f) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(f.width()) << "\" height=\""
      << num(f.height()) << "\" viewBox=\"0 0 " << num(f.width()) << " " << num(f.height()) << "\">\n";
  out << "<style>.edge{stroke:#333;stroke-width:1.5;fill:none}.vertex{fill:#1f77b4}"
         ".crossing{fill:#d62728}text{font:10px sans-serif}</style>\n";
}

void vertices(std::ostringstream& out, const Frame& f, const Graph& g,
              const std::function<std::pair<double, double>(VertexId)>& at) {
  for (VertexId v : g.vertices()) {
    auto [x, y] = at(v);
    out << "<circle class=\"vertex\" cx=\"" << num(f.sx(x)) << "\" cy=\"" << num(f.sy(y)) << "\" r=\"4\"/>\n";
    out << "<text x=\"" << num(f.sx(x) + 6) << "\" y=\"" << num(f.sy(y) - 6) << "\">" << v << "</text>\n";
  }
}

void crossings(std::ostringstream& out, const Frame& f, const CrossingGraph& x) {
  for (const auto& [_, p] : x.crossing_points) {
    out << "<circle class=\"crossing\" cx=\"" << num(f.sx(to_double(p.x))) << "\" cy=\""
        << num(f.sy(to_double(p.y))) << "\" r=\"2.5\"/>\n";
  }
}

}  // namespace

std::string to_svg(const CircularDrawing& d) {
  Frame f{-1.0, -1.0, 1.0, 1.0, 200.0};
  std::ostringstream out;
  header(out, f);
  out << "<circle cx=\"" << num(f.sx(0)) << "\" cy=\"" << num(f.sy(0)) << "\" r=\"" << num(f.scale)
      << "\" fill=\"none\" stroke=\"#bbb\"/>\n";
  auto at = [&](VertexId v) {
    Point p = d.position(v);
    return std::make_pair(to_double(p.x), to_double(p.y));
  };
  for (const Edge& e : d.graph().edges()) {
    auto [x1, y1] = at(e.u);
    auto [x2, y2] = at(e.v);
    out << "<line class=\"edge\" x1=\"" << num(f.sx(x1)) << "\" y1=\"" << num(f.sy(y1)) << "\" x2=\""
        << num(f.sx(x2)) << "\" y2=\"" << num(f.sy(y2)) << "\"/>\n";
  }
  crossings(out, f, crossing_graph(d));
  vertices(out, f, d.graph(), at);
  out << "</svg>\n";
  return out.str();
}

std::string to_svg(const StraightLineDrawing& d) {
  auto at = [&](VertexId v) {
    const Point& p = d.position(v);
    return std::make_pair(to_double(p.x), to_double(p.y));
  };
  Frame f{0, 0, 1, 1, 1};
  bool first = true;
  for (VertexId v : d.graph().vertices()) {
    auto [x, y] = at(v);
    if (first) {
      f = Frame{x, y, x, y, 1};
      first = false;
    }
    f.min_x = std::min(f.min_x, x);
    f.max_x = std::max(f.max_x, x);
    f.min_y = std::min(f.min_y, y);
    f.max_y = std::max(f.max_y, y);
  }
  if (d.linear()) f.max_y = std::max(f.max_y, (f.max_x - f.min_x) / 2);
  double extent = std::max({f.max_x - f.min_x, f.max_y - f.min_y, 1e-9});
  f.scale = 400.0 / extent;
  std::ostringstream out;
  header(out, f);
  for (const Edge& e : d.graph().edges()) {
    auto [x1, y1] = at(e.u);
    auto [x2, y2] = at(e.v);
    if (d.linear()) {
      double r = std::abs(x2 - x1) / 2 * f.scale;
      out << "<path class=\"edge\" d=\"M " << num(f.sx(std::min(x1, x2))) << " " << num(f.sy(0)) << " A " << num(r)
          << " " << num(r) << " 0 0 1 " << num(f.sx(std::max(x1, x2))) << " " << num(f.sy(0)) << "\"/>\n";
    } else {
      out << "<line class=\"edge\" x1=\"" << num(f.sx(x1)) << "\" y1=\"" << num(f.sy(y1)) << "\" x2=\""
          << num(f.sx(x2)) << "\" y2=\"" << num(f.sy(y2)) << "\"/>\n";
    }
  }
  if (!d.linear()) crossings(out, f, crossing_graph(d));
  vertices(out, f, d.graph(), at);
  out << "</svg>\n";
  return out.str();
}

std::string to_svg(const Drawing& d) {
  return std::visit([](const auto& x) { return to_svg(x); }, d);
}

void export_svg(const Drawing& d, const std::filesystem::path& path) { write_text_file(path, to_svg(d)); }

}  // namespace chordal
