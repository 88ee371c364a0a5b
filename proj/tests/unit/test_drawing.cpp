#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "chordal/algorithms.hpp"
#include "chordal/drawing.hpp"
#include "chordal/enumeration.hpp"
#include "chordal/error.hpp"
#include "chordal/generators.hpp"
#include "chordal/planarisation.hpp"
#include "chordal/serialize.hpp"
#include "chordal/svg.hpp"

using namespace chordal;

namespace {

std::vector<VertexId> natural(const Graph& g) { return {g.vertices().begin(), g.vertices().end()}; }

CircularDrawing random_drawing(std::mt19937_64& rng, int max_n) {
  int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 1));
  std::bernoulli_distribution coin(0.45);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  Graph g = Graph::on_range(n, std::move(edges));
  std::vector<VertexId> order = natural(g);
  std::shuffle(order.begin(), order.end(), rng);
  return make_circular(g, order);
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(MakeCircular, CrossingCounts) {
  EXPECT_EQ(crossing_graph(make_circular(complete_graph(3), {0, 1, 2})).graph.num_edges(), 0);
  Graph k4 = Graph::on_range(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  auto x = crossing_graph(make_circular(k4, {0, 1, 2, 3}));
  EXPECT_EQ(x.graph.num_vertices(), 6);
  ASSERT_EQ(x.graph.num_edges(), 1);
  // chords 0-2 and 1-3 have edge ids 1 and 4
  EXPECT_TRUE(x.graph.adjacent(*k4.edge_id(0, 2), *k4.edge_id(1, 3)));

  Graph matching = Graph({1, 2, 3, 4, 5, 6}, {{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(crossing_graph(make_circular(matching, {1, 3, 5, 2, 4, 6})).graph.num_edges(), 3);
}

TEST(MakeCircular, RejectsNonPermutations) {
  EXPECT_THROW(make_circular(complete_graph(3), {0, 1}), Error);
  EXPECT_THROW(make_circular(complete_graph(3), {0, 1, 1}), Error);
  EXPECT_THROW(make_circular(complete_graph(3), {0, 1, 5}), Error);
}

TEST(MakeCircular, TriplePointsAreRemoved) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    CircularDrawing d = random_drawing(rng, 9);
    EXPECT_NO_THROW(crossing_graph(d));
  }
  // antipodal parameters satisfy t * t' = -1, so these three chords are
  // diameters through the origin
  Graph diagonals = Graph::on_range(6, {{0, 3}, {1, 4}, {2, 5}});
  std::map<VertexId, Rational> anchors;
  anchors[0] = Rational(-3);
  anchors[3] = Rational(1, 3);
  anchors[1] = Rational(-1, 2);
  anchors[4] = Rational(2);
  anchors[2] = Rational(-1, 5);
  anchors[5] = Rational(5);
  std::vector<VertexId> order{0, 1, 2, 3, 4, 5};
  CircularDrawing concurrent(diagonals, order, anchors);
  EXPECT_THROW(crossing_graph(concurrent), Error);
  CircularDrawing fixed = make_generic(concurrent);
  auto x = crossing_graph(fixed);
  EXPECT_EQ(x.graph.num_edges(), 3);
  EXPECT_GT(fixed.anchor(5), Rational(5));
}

TEST(CrossingGraph, InterleavingMatchesSegmentIntersection) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    CircularDrawing d = random_drawing(rng, 10);
    const Graph& g = d.graph();
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
        const Edge& a = g.edge(e);
        const Edge& b = g.edge(f);
        bool exact = proper_intersection(d.position(a.u), d.position(a.v), d.position(b.u), d.position(b.v)).has_value();
        ASSERT_EQ(d.chords_cross(e, f), exact);
      }
    }
    EXPECT_EQ(crossing_graph(d).graph, crossing_graph_of_order(g, d.order()));
  }
}

TEST(CrossingGraph, CrossingFreeOrder) {
  Graph c6 = cycle_graph(6);
  EXPECT_EQ(crossing_graph(make_circular(c6, natural(c6))).graph.num_edges(), 0);
}

TEST(Planarise, K4NaturalOrder) {
  Graph k4 = complete_graph(4);
  Planarisation p = planarise(make_circular(k4, natural(k4)));
  EXPECT_EQ(p.plane_graph.num_vertices(), 5);
  EXPECT_EQ(p.plane_graph.num_edges(), 8);
  EXPECT_EQ(p.faces.size(), 5U);
  ASSERT_EQ(p.dummy_origin.size(), 1U);
  EXPECT_EQ(p.dummy_origin.begin()->first, 4);
  EXPECT_TRUE(euler_holds(p));
  MapGraph m = map_graph(p);
  EXPECT_EQ(m.graph.num_vertices(), 5);
  EXPECT_EQ(m.graph.num_edges(), 10);
  EXPECT_EQ(graph_radius(m.graph), 1);
}

TEST(Planarise, CrossingFreeIsIdentity) {
  Graph c5 = cycle_graph(5);
  Planarisation p = planarise(make_circular(c5, natural(c5)));
  EXPECT_EQ(p.plane_graph, c5);
  EXPECT_TRUE(p.dummy_origin.empty());
  EXPECT_EQ(p.faces.size(), 2U);
}

TEST(Planarise, SingleCrossingHasOneDummy) {
  Graph two = Graph::on_range(4, {{0, 2}, {1, 3}});
  Planarisation p = planarise(make_circular(two, {0, 1, 2, 3}));
  ASSERT_EQ(p.dummy_origin.size(), 1U);
  EXPECT_EQ(p.plane_graph.degree(p.dummy_origin.begin()->first), 4);
}

TEST(Planarise, SingleChordHasOneFace) {
  Graph chord = path_graph(2);
  Planarisation p = planarise(make_circular(chord, {0, 1}));
  EXPECT_EQ(p.faces.size(), 1U);
  EXPECT_EQ(map_graph(p).graph.num_vertices(), 1);
}

TEST(Planarise, RandomDrawingsSatisfyStructuralInvariants) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    CircularDrawing d = random_drawing(rng, 10);
    Planarisation p = planarise(d);
    ASSERT_TRUE(euler_holds(p));
    auto x = crossing_graph(d);
    EXPECT_EQ(p.dummy_origin.size(), static_cast<std::size_t>(x.graph.num_edges()));
    for (const auto& [dummy, origin] : p.dummy_origin) {
      ASSERT_EQ(p.plane_graph.degree(dummy), 4);
      const auto& rot = p.rotation.at(dummy);
      for (std::size_t k = 0; k < 4; ++k) {
        EdgeId here = p.edge_origin[static_cast<std::size_t>(rot[k])];
        EdgeId after = p.edge_origin[static_cast<std::size_t>(rot[(k + 1) % 4])];
        EXPECT_NE(here, after);
        EXPECT_TRUE(here == origin.first || here == origin.second);
      }
    }
    // darts partition: every dart appears in exactly one walk
    std::set<std::pair<VertexId, VertexId>> darts;
    for (const Face& f : p.faces)
      for (const FaceWalk& w : f.walks)
        for (const Dart& dt : w.darts) EXPECT_TRUE(darts.emplace(dt.from, dt.to).second);
    EXPECT_EQ(darts.size(), 2U * static_cast<std::size_t>(p.plane_graph.num_edges()));
    EXPECT_TRUE(map_graph(p).graph.is_connected());
  }
}

TEST(Planarise, StraightLineNesting) {
  // a triangle with a small triangle inside and an isolated vertex outside
  Graph g = Graph({0, 1, 2, 3, 4, 5, 6}, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  std::map<VertexId, Point> c{{0, {0, 0}},   {1, {10, 0}}, {2, {0, 10}}, {3, {1, 1}},
                              {4, {3, 1}},   {5, {1, 3}},  {6, {20, 20}}};
  Planarisation p = planarise(StraightLineDrawing(g, c));
  ASSERT_EQ(p.faces.size(), 3U);
  EXPECT_EQ(p.faces[0].walks.size(), 2U);  // outer triangle walk + isolated vertex
  EXPECT_TRUE(euler_holds(p));
  MapGraph m = map_graph(p);
  EXPECT_TRUE(m.graph.is_connected());
}

TEST(Planarise, LinearDrawingIsRejected) {
  Graph g = path_graph(2);
  StraightLineDrawing d(g, {{0, {0, 0}}, {1, {1, 0}}}, true);
  EXPECT_THROW(planarise(d), Error);
}

TEST(StraightLine, InvariantsAreEnforced) {
  Graph g = path_graph(3);
  EXPECT_THROW(StraightLineDrawing(g, {{0, {0, 0}}, {1, {0, 0}}, {2, {1, 1}}}), Error);
  Graph two = Graph::on_range(3, {{0, 1}});
  EXPECT_THROW(StraightLineDrawing(two, {{0, {0, 0}}, {1, {2, 0}}, {2, {1, 0}}}), Error);
  EXPECT_THROW(StraightLineDrawing(g, {{0, {0, 0}}, {1, {1, 0}}, {2, {1, 0}}}, true), Error);
}

TEST(WrapLinear, PreservesCrossingGraph) {
  Graph g1 = Graph({1, 2, 3}, {{1, 3}});
  StraightLineDrawing d1(g1, {{1, {1, 0}}, {2, {2, 0}}, {3, {3, 0}}}, true);
  EXPECT_EQ(crossing_graph(d1).graph.num_edges(), 0);
  EXPECT_EQ(crossing_graph(wrap_linear(d1)).graph.num_edges(), 0);

  Graph g2 = Graph({1, 2, 3, 4}, {{1, 3}, {2, 4}});
  StraightLineDrawing d2(g2, {{1, {1, 0}}, {2, {2, 0}}, {3, {3, 0}}, {4, {4, 0}}}, true);
  EXPECT_EQ(crossing_graph(d2).graph.num_edges(), 1);
  EXPECT_EQ(crossing_graph(wrap_linear(d2)).graph, crossing_graph(d2).graph);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    int n = 3 + static_cast<int>(rng() % 7);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) edges.emplace_back(a, b);
    Graph g = Graph::on_range(n, edges);
    std::vector<int> xs(static_cast<std::size_t>(n));
    std::iota(xs.begin(), xs.end(), 0);
    std::shuffle(xs.begin(), xs.end(), rng);
    std::map<VertexId, Point> coords;
    for (int v = 0; v < n; ++v) coords[v] = Point{Rational(xs[static_cast<std::size_t>(v)], 3), Rational(0)};
    StraightLineDrawing lin(g, coords, true);
    EXPECT_EQ(crossing_graph(wrap_linear(lin)).graph, crossing_graph(lin).graph);
  }
  EXPECT_THROW(wrap_linear(as_straight_line(make_circular(g2, {1, 2, 3, 4}))), Error);
}

TEST(Enumeration, Counts) {
  std::vector<std::pair<int, std::uint64_t>> cases{{1, 1}, {2, 1}, {3, 1}, {4, 3}, {5, 12}, {8, 2520}};
  for (auto [n, expected] : cases) {
    CircularOrderEnumerator en(Graph::on_range(n, {}));
    EXPECT_EQ(en.count(), expected);
    std::uint64_t seen = 0;
    en.for_each_order([&](const std::vector<VertexId>&) { ++seen; });
    EXPECT_EQ(seen, expected) << n;
  }
  EXPECT_THROW(CircularOrderEnumerator(Graph::on_range(11, {})), Error);
}

TEST(Enumeration, ChunksPartitionTheStream) {
  CircularOrderEnumerator en(Graph::on_range(7, {}));
  std::vector<std::vector<VertexId>> all;
  en.for_each_order([&](const std::vector<VertexId>& o) { all.push_back(o); });
  std::vector<std::vector<VertexId>> chunked;
  for (int k = 0; k < 7; ++k) {
    auto [b, e] = en.chunk(k, 7);
    en.for_each_order(b, e, [&](const std::vector<VertexId>& o) { chunked.push_back(o); });
  }
  EXPECT_EQ(all, chunked);
  // distinct up to rotation and reflection
  std::set<std::vector<VertexId>> canon;
  for (auto o : all) {
    std::vector<VertexId> best;
    for (int r = 0; r < 2; ++r) {
      for (std::size_t s = 0; s < o.size(); ++s) {
        std::rotate(o.begin(), o.begin() + 1, o.end());
        if (best.empty() || o < best) best = o;
      }
      std::reverse(o.begin(), o.end());
    }
    EXPECT_TRUE(canon.insert(best).second);
  }
}

TEST(Export, JsonRoundTrip) {
  std::mt19937_64 rng(5);
  auto dir = std::filesystem::temp_directory_path() / "chordal_test_json";
  std::filesystem::create_directories(dir);
  for (int i = 0; i < 20; ++i) {
    CircularDrawing d = random_drawing(rng, 9);
    export_json(d, dir / "d.json");
    Drawing back = import_drawing(dir / "d.json");
    ASSERT_TRUE(std::holds_alternative<CircularDrawing>(back));
    EXPECT_EQ(std::get<CircularDrawing>(back), d);
  }
  Graph g = Graph({1, 2}, {{1, 2}}, {{1, "a"}});
  StraightLineDrawing s(g, {{1, {Rational(1, 3), Rational(-2, 7)}}, {2, {Rational(5), Rational(0)}}});
  export_json(s, dir / "s.json");
  EXPECT_EQ(std::get<StraightLineDrawing>(import_drawing(dir / "s.json")), s);
  EXPECT_THROW(import_drawing(dir / "missing.json"), Error);
  EXPECT_THROW(drawing_from_json(Json::parse(R"({"graph": {"vertices": [0], "edges": [[0, 0]]}, "order": [0]})")),
               Error);
  std::filesystem::remove_all(dir);
}

TEST(Export, Svg) {
  Graph k4 = complete_graph(4);
  std::string svg = to_svg(make_circular(k4, natural(k4)));
  EXPECT_EQ(count_of(svg, "<line"), 6U);
  EXPECT_EQ(count_of(svg, "class=\"crossing\""), 1U);
  std::string empty = to_svg(make_circular(Graph{}, {}));
  EXPECT_NE(empty.find("<svg"), std::string::npos);
  EXPECT_NE(empty.find("</svg>"), std::string::npos);
  EXPECT_THROW(export_svg(make_circular(k4, natural(k4)), "/nonexistent-dir/x.svg"), Error);
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(to_string(parse_rational("-0.125")), "-1/8");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}
